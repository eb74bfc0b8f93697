#include "tropcol/tropical.hpp"

#include <doctest.h>

#include <algorithm>
#include <array>
#include <random>

using namespace tropcol;

namespace {

// Independent oracle: walk all six permutations with next_permutation and
// count how often the minimum sum is attained.
bool singular_by_enumeration(const std::array<std::array<Rat, 3>, 3>& m) {
	std::array<int, 3> perm{0, 1, 2};
	std::vector<Rat> sums;
	do {
		sums.push_back(m[0][perm[0]] + m[1][perm[1]] + m[2][perm[2]]);
	} while (std::next_permutation(perm.begin(), perm.end()));
	Rat min = *std::min_element(sums.begin(), sums.end());
	return std::count(sums.begin(), sums.end(), min) >= 2;
}

std::array<std::array<Rat, 3>, 3> mat3(std::array<std::array<int, 3>, 3> v) {
	std::array<std::array<Rat, 3>, 3> m;
	for (int i = 0; i < 3; ++i)
		for (int j = 0; j < 3; ++j)
			m[i][j] = v[i][j];
	return m;
}

RatMatrix random_matrix(std::mt19937_64& rng, int max_dim = 6) {
	int r = 1 + int(rng() % max_dim), c = 1 + int(rng() % max_dim);
	RatMatrix m(r, c);
	for (int i = 0; i < r; ++i)
		for (int j = 0; j < c; ++j) {
			Rat q(int(rng() % 41) - 20, int(rng() % 10) + 1);
			q.canonicalize();
			m.at(i, j) = q;
		}
	return m;
}

} // namespace

TEST_CASE("3x3 singularity on the worked examples") {
	auto zero = mat3({{{0, 0, 0}, {0, 0, 0}, {0, 0, 0}}});
	auto tie = mat3({{{0, 0, 1}, {0, 1, 0}, {1, 0, 0}}});   // sums {1,0,0,1,1,3}
	auto strict = mat3({{{0, 1, 2}, {1, 0, 2}, {2, 2, 0}}}); // sums {0,4,2,5,5,4}
	CHECK(trop_det3_is_singular(zero));
	CHECK(trop_det3_is_singular(tie));
	CHECK_FALSE(trop_det3_is_singular(strict));
	CHECK(singular_by_enumeration(zero));
	CHECK(singular_by_enumeration(tie));
	CHECK_FALSE(singular_by_enumeration(strict));
}

TEST_CASE("3x3 singularity agrees with the enumeration oracle at random") {
	std::mt19937_64 rng(20240901);
	for (int iter = 0; iter < 2000; ++iter) {
		std::array<std::array<Rat, 3>, 3> m;
		for (int i = 0; i < 3; ++i)
			for (int j = 0; j < 3; ++j)
				m[i][j] = Rat(int(rng() % 5)); // small range to force ties often
		CHECK(trop_det3_is_singular(m) == singular_by_enumeration(m));
	}
}

TEST_CASE("row and column tropical scaling preserve singularity") {
	std::mt19937_64 rng(7);
	for (int iter = 0; iter < 500; ++iter) {
		std::array<std::array<Rat, 3>, 3> m;
		for (int i = 0; i < 3; ++i)
			for (int j = 0; j < 3; ++j)
				m[i][j] = Rat(int(rng() % 4));
		bool base = trop_det3_is_singular(m);
		int line = int(rng() % 3);
		Rat shift(int(rng() % 7) - 3);
		auto shifted = m;
		if (rng() % 2) {
			for (int j = 0; j < 3; ++j) shifted[line][j] += shift;
		} else {
			for (int i = 0; i < 3; ++i) shifted[i][line] += shift;
		}
		CHECK(trop_det3_is_singular(shifted) == base);
	}
}

TEST_CASE("small matrices are collinear by convention") {
	RatMatrix m(2, 5);
	CHECK(tropical_rank_le2(m).collinear);
	CHECK(tropical_rank_le2(RatMatrix(7, 2)).collinear);
	CHECK(tropical_rank_le2(RatMatrix(1, 1)).collinear);
}

TEST_CASE("nonsingular 3x3 yields the witness") {
	RatMatrix m(3, 3);
	int vals[3][3] = {{0, 1, 2}, {1, 0, 2}, {2, 2, 0}};
	for (int i = 0; i < 3; ++i)
		for (int j = 0; j < 3; ++j)
			m.at(i, j) = vals[i][j];
	auto v = tropical_rank_le2(m);
	CHECK_FALSE(v.collinear);
	CHECK(v.witness_rows == std::array<int, 3>{1, 2, 3});
	CHECK(v.witness_cols == std::array<int, 3>{1, 2, 3});
}

TEST_CASE("image of pi is collinear: the worked 3x5 example") {
	RatMatrix m(3, 5);
	for (int j : {1, 3, 4}) m.at(2, j) = 1; // columns 0, e3, 0, e3, e3
	CHECK(tropical_rank_le2(m).collinear);
}

TEST_CASE("transpose symmetry on random rational matrices") {
	std::mt19937_64 rng(424242);
	for (int iter = 0; iter < 300; ++iter) {
		RatMatrix m = random_matrix(rng);
		CHECK(tropical_rank_le2(m).collinear == tropical_rank_le2(m.transposed()).collinear);
	}
}

TEST_CASE("transpose symmetry, exhaustive over small 0/1/2 matrices") {
	// all 3x3 matrices with entries in {0,1}
	for (int bits = 0; bits < (1 << 9); ++bits) {
		RatMatrix m(3, 3);
		for (int i = 0; i < 3; ++i)
			for (int j = 0; j < 3; ++j)
				m.at(i, j) = (bits >> (3 * i + j)) & 1;
		CHECK(tropical_rank_le2(m).collinear == tropical_rank_le2(m.transposed()).collinear);
	}
}

TEST_CASE("permuting rows or columns preserves the verdict") {
	std::mt19937_64 rng(99);
	for (int iter = 0; iter < 200; ++iter) {
		RatMatrix m = random_matrix(rng, 5);
		std::vector<int> rp(m.rows()), cp(m.cols());
		for (int i = 0; i < m.rows(); ++i) rp[i] = i;
		for (int j = 0; j < m.cols(); ++j) cp[j] = j;
		std::shuffle(rp.begin(), rp.end(), rng);
		std::shuffle(cp.begin(), cp.end(), rng);
		RatMatrix p(m.rows(), m.cols());
		for (int i = 0; i < m.rows(); ++i)
			for (int j = 0; j < m.cols(); ++j)
				p.at(i, j) = m.at(rp[i], cp[j]);
		CHECK(tropical_rank_le2(p).collinear == tropical_rank_le2(m).collinear);
	}
}

TEST_CASE("normalize_point") {
	CHECK(normalize_point({Rat(0), Rat(0), Rat(0)}).coords ==
	      std::vector<Rat>{Rat(0), Rat(0), Rat(0)});
	CHECK(normalize_point({Rat(5), Rat(5), Rat(5)}).coords ==
	      std::vector<Rat>{Rat(0), Rat(0), Rat(0)});
	CHECK(normalize_point({Rat(1), Rat(2), Rat(4)}).coords ==
	      std::vector<Rat>{Rat(0), Rat(1), Rat(3)});
}
