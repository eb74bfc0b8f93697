#include "tropcol/homology.hpp"

#include "tropcol/combs.hpp"
#include "tropcol/exact_linalg.hpp"

#include <map>

namespace tropcol {

namespace {

// Boundary of the k-faces against the (k-1)-face index; ascending vertex
// tuples with alternating signs.
std::vector<SparseColumn> boundary_matrix(const std::vector<std::vector<int>>& lower,
                                          const std::vector<std::vector<int>>& upper) {
	std::map<std::vector<int>, int> index;
	for (size_t i = 0; i < lower.size(); ++i) index.emplace(lower[i], int(i));
	std::vector<SparseColumn> cols;
	cols.reserve(upper.size());
	std::vector<int> sub;
	for (const auto& face : upper) {
		SparseColumn col;
		col.reserve(face.size());
		for (size_t i = 0; i < face.size(); ++i) {
			sub.assign(face.begin(), face.end());
			sub.erase(sub.begin() + i);
			col.emplace_back(index.at(sub), Rat(i % 2 == 0 ? 1 : -1));
		}
		std::sort(col.begin(), col.end(),
		          [](const auto& a, const auto& b) { return a.first < b.first; });
		cols.push_back(std::move(col));
	}
	return cols;
}

} // namespace

HomologyReport betti_numbers(const CollinearComplex& cx, Coefficients coeff,
                             std::int64_t max_faces) {
	HomologyReport report;
	report.coloring = cx.coloring;
	report.rank_formula = homology_rank_formula(cx.coloring);
	report.comb_count = count_combs(cx.coloring);
	if (cx.empty()) {
		report.integral = coeff == Coefficients::integers;
		return report;
	}

	report.face_counts = face_vector(cx, max_faces);

	const int top = int(report.face_counts.size()) - 1;
	std::vector<std::vector<std::vector<int>>> faces(top + 1);
	for (int k = 0; k <= top; ++k) faces[k] = faces_of_dimension(cx, k);

	// ranks[k] = rank of d_k : C_k -> C_{k-1} in the reduced chain complex;
	// d_0 maps every vertex to the empty face
	std::vector<int> ranks(top + 2, 0);
	ranks[0] = 1;
	report.torsion.assign(top + 1, {});
	for (int k = 1; k <= top; ++k) {
		std::vector<SparseColumn> cols = boundary_matrix(faces[k - 1], faces[k]);
		if (coeff == Coefficients::rational_field) {
			ranks[k] = rank_over_q(std::move(cols));
		} else {
			std::vector<Int> factors = smith_invariant_factors(std::move(cols),
			                                                   int(faces[k - 1].size()));
			ranks[k] = int(factors.size());
			for (const Int& f : factors)
				if (f != 1) report.torsion[k - 1].push_back(f);
		}
	}
	report.integral = coeff == Coefficients::integers;

	report.reduced_betti.resize(top + 1);
	for (int k = 0; k <= top; ++k)
		report.reduced_betti[k] = report.face_counts[k] - ranks[k] - ranks[k + 1];
	return report;
}

bool euler_check(const HomologyReport& report) {
	// empty complex: all rank methods must agree on zero
	if (report.face_counts.empty()) return report.rank_formula == 0 && report.comb_count == 0;
	std::int64_t chi = 0;
	for (size_t k = 0; k < report.face_counts.size(); ++k)
		chi += (k % 2 == 0) ? report.face_counts[k] : -report.face_counts[k];
	--chi; // the empty face
	const int top = int(report.face_counts.size()) - 1;
	std::int64_t h = report.reduced_betti.empty() ? 0 : report.reduced_betti[top];
	return chi == ((top % 2 == 0) ? h : -h);
}

} // namespace tropcol
