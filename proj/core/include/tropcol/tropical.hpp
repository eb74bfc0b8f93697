#ifndef TROPCOL_TROPICAL_HPP
#define TROPCOL_TROPICAL_HPP

#include "tropcol/matrix.hpp"

#include <array>

namespace tropcol {

// Min-plus 3x3 singularity: the minimum over the six permutation sums
// sum_i m[i][sigma(i)] is attained at least twice.
bool trop_det3_is_singular(const std::array<std::array<Rat, 3>, 3>& m);

struct CollinearityVerdict {
	bool collinear = true;
	// 1-based indices of the lexicographically first tropically nonsingular
	// 3x3 minor, set iff !collinear.
	std::array<int, 3> witness_rows{};
	std::array<int, 3> witness_cols{};
};

// The columns of m are tropically collinear iff every 3x3 minor is
// tropically singular (tropical rank <= 2). Matrices with fewer than three
// rows or columns are collinear by convention.
CollinearityVerdict tropical_rank_le2(const RatMatrix& m);

} // namespace tropcol

#endif
