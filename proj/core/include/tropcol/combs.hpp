#ifndef TROPCOL_COMBS_HPP
#define TROPCOL_COMBS_HPP

#include "tropcol/rational.hpp"
#include "tropcol/splits.hpp"
#include "tropcol/trees.hpp"

#include <vector>

namespace tropcol {

// Stirling number of the second kind: partitions of an m-set into k
// nonempty blocks. S(0,0) = 1, S(m,0) = 0 for m > 0.
Int stirling2(int m, int k);

// Rank of the top homology:
//   sum_{k=1}^{min(n-1,d-1)} (k!)^2 S(n-1,k) S(d-1,k).
// Computed both in this form and as the product of two signed binomial
// sums; the two must agree and the common value is returned.
Int homology_rank_formula(const Coloring& c);

// Combs are caterpillars 1, c_1, ..., c_{N-2}, N whose neighbor of 1 is
// unmarked, neighbor of N marked, and same-colored consecutive ends carry
// increasing labels. Their count is the top Betti number.
Int count_combs(const Coloring& c);

// The middle label sequences (c_1, ..., c_{N-2}) of all combs, in
// lexicographic order.
std::vector<std::vector<int>> enumerate_comb_sequences(const Coloring& c);

// The caterpillar tree of a comb: nested splits {c_k, ..., c_{N-2}, N} with
// unit lengths. Lets combs be located inside a shelling order.
PhyloTree comb_tree(const std::vector<int>& middle, const Coloring& c);

} // namespace tropcol

#endif
