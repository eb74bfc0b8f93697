#include "tropcol/homology.hpp"

#include "tropcol/exact_linalg.hpp"

#include <doctest.h>

#include <random>

using namespace tropcol;

namespace {

std::vector<SparseColumn> dense_to_sparse(const std::vector<std::vector<int>>& rows) {
	std::vector<SparseColumn> cols(rows.empty() ? 0 : rows[0].size());
	for (int r = 0; r < int(rows.size()); ++r)
		for (int c = 0; c < int(rows[r].size()); ++c)
			if (rows[r][c] != 0) cols[c].emplace_back(r, Rat(rows[r][c]));
	return cols;
}

} // namespace

TEST_CASE("rank over Q on hand matrices") {
	CHECK(rank_over_q(dense_to_sparse({{1, 0}, {0, 1}})) == 2);
	CHECK(rank_over_q(dense_to_sparse({{1, 2}, {2, 4}})) == 1);
	CHECK(rank_over_q(dense_to_sparse({{0, 0}, {0, 0}})) == 0);
	CHECK(rank_over_q(dense_to_sparse({{1, 2, 3}, {4, 5, 6}, {7, 8, 9}})) == 2);
}

TEST_CASE("rank over Q agrees with the dense elimination route") {
	std::mt19937_64 rng(2718);
	for (int iter = 0; iter < 100; ++iter) {
		int r = 1 + int(rng() % 8), c = 1 + int(rng() % 8);
		std::vector<std::vector<int>> rows(r, std::vector<int>(c));
		for (auto& row : rows)
			for (auto& x : row) x = int(rng() % 5) - 2;
		std::vector<std::vector<Rat>> dense_cols(c, std::vector<Rat>(r));
		for (int i = 0; i < r; ++i)
			for (int j = 0; j < c; ++j)
				dense_cols[j][i] = rows[i][j];
		CHECK(rank_over_q(dense_to_sparse(rows)) == dense_column_rank(dense_cols));
	}
}

TEST_CASE("smith invariant factors on hand matrices") {
	using factors = std::vector<Int>;
	CHECK(smith_invariant_factors(dense_to_sparse({{1, 0}, {0, 1}}), 2) == factors{1, 1});
	CHECK(smith_invariant_factors(dense_to_sparse({{2, 0}, {0, 3}}), 2) == factors{1, 6});
	CHECK(smith_invariant_factors(dense_to_sparse({{2, 4}, {4, 4}}), 2) == factors{2, 4});
	CHECK(smith_invariant_factors(dense_to_sparse({{0, 0}, {0, 0}}), 2) == factors{});
	// a cokernel with torsion
	CHECK(smith_invariant_factors(dense_to_sparse({{2}}), 1) == factors{2});
	// divisibility chain holds
	auto f = smith_invariant_factors(
	    dense_to_sparse({{6, 4, 2}, {4, 6, 2}, {2, 2, 2}}), 3);
	for (size_t i = 0; i + 1 < f.size(); ++i) CHECK(f[i + 1] % f[i] == 0);
}

TEST_CASE("smith rank agrees with rational rank at random") {
	std::mt19937_64 rng(1618);
	for (int iter = 0; iter < 60; ++iter) {
		int r = 1 + int(rng() % 7), c = 1 + int(rng() % 7);
		std::vector<std::vector<int>> rows(r, std::vector<int>(c));
		for (auto& row : rows)
			for (auto& x : row) x = int(rng() % 7) - 3;
		CHECK(int(smith_invariant_factors(dense_to_sparse(rows), r).size()) ==
		      rank_over_q(dense_to_sparse(rows)));
	}
}

TEST_CASE("betti numbers of the small complexes") {
	HomologyReport r22 = betti_numbers(build_complex(Coloring{2, 2}));
	CHECK(r22.reduced_betti == std::vector<std::int64_t>{1});
	CHECK(r22.rank_formula == 1);
	CHECK(euler_check(r22));

	HomologyReport r33 = betti_numbers(build_complex(Coloring{3, 3}));
	CHECK(r33.reduced_betti == std::vector<std::int64_t>{0, 0, 5});
	CHECK(euler_check(r33));

	HomologyReport r34 = betti_numbers(build_complex(Coloring{3, 4}));
	CHECK(r34.reduced_betti == std::vector<std::int64_t>{0, 0, 0, 13});
	CHECK(euler_check(r34));
}

TEST_CASE("integral homology is torsion free and matches the rational ranks") {
	for (Coloring c : {Coloring{2, 2}, Coloring{3, 3}, Coloring{3, 4}}) {
		CollinearComplex cx = build_complex(c);
		HomologyReport rq = betti_numbers(cx, Coefficients::rational_field);
		HomologyReport rz = betti_numbers(cx, Coefficients::integers);
		CHECK(rz.integral);
		CHECK(rq.reduced_betti == rz.reduced_betti);
		for (const auto& dim : rz.torsion) CHECK(dim.empty());
	}
}

TEST_CASE("a single simplex is contractible: all reduced betti zero") {
	// nested chain of three compatible bicolored splits: one maximal face
	CollinearComplex cx;
	cx.coloring = Coloring{3, 3};
	cx.vertices = {make_split(6, {3, 6}), make_split(6, {2, 3, 6}), make_split(6, {2, 3, 5, 6})};
	std::sort(cx.vertices.begin(), cx.vertices.end(), split_lex_less);
	cx.adjacency.assign(3, VertexSet(3));
	for (int i = 0; i < 3; ++i)
		for (int j = 0; j < 3; ++j)
			if (i != j) cx.adjacency[i].set(j);
	HomologyReport r = betti_numbers(cx);
	CHECK(r.reduced_betti == std::vector<std::int64_t>{0, 0, 0});
	// reduced Euler characteristic of a simplex is zero, matching h = 0
	std::int64_t chi = r.face_counts[0] - r.face_counts[1] + r.face_counts[2] - 1;
	CHECK(chi == 0);
}

TEST_CASE("empty complex reports zero everywhere") {
	HomologyReport r = betti_numbers(build_complex(Coloring{1, 5}));
	CHECK(r.face_counts.empty());
	CHECK(r.reduced_betti.empty());
	CHECK(r.rank_formula == 0);
	CHECK(r.comb_count == 0);
	CHECK(euler_check(r));
}

TEST_CASE("face cap refuses oversized instances with the counts") {
	CollinearComplex cx = build_complex(Coloring{3, 3});
	CHECK_THROWS_AS(betti_numbers(cx, Coefficients::rational_field, 10), resource_cap_exceeded);
	try {
		betti_numbers(cx, Coefficients::rational_field, 10);
	} catch (const resource_cap_exceeded& e) {
		CHECK(std::string(e.what()).find("more than 10") != std::string::npos);
	}
}

TEST_CASE("solve_columns finds the unique representation") {
	std::vector<std::vector<Rat>> cols = {{Rat(1), Rat(0), Rat(1)}, {Rat(0), Rat(1), Rat(1)}};
	auto sol = solve_columns(cols, {Rat(2), Rat(3), Rat(5)});
	REQUIRE(sol.has_value());
	CHECK((*sol)[0] == 2);
	CHECK((*sol)[1] == 3);
	CHECK_FALSE(solve_columns(cols, {Rat(2), Rat(3), Rat(4)}).has_value());
	std::vector<std::vector<Rat>> dep = {{Rat(1), Rat(2)}, {Rat(2), Rat(4)}};
	CHECK_THROWS_AS(solve_columns(dep, {Rat(1), Rat(2)}), std::invalid_argument);
}
