#ifndef TROPCOL_EXACT_LINALG_HPP
#define TROPCOL_EXACT_LINALG_HPP

#include "tropcol/rational.hpp"

#include <optional>
#include <utility>
#include <vector>

namespace tropcol {

// Sparse column: (row, value) pairs sorted by row, values nonzero.
using SparseColumn = std::vector<std::pair<int, Rat>>;

// Exact rank over the rationals by left-to-right column reduction against
// recorded pivots (the standard boundary-matrix reduction, run over Q).
int rank_over_q(std::vector<SparseColumn> columns);

// Dense exact solve of A x = b where A is m x k given by columns. Returns
// the unique solution if the columns are independent and b lies in their
// span, std::nullopt if inconsistent. Throws if the columns are dependent.
std::optional<std::vector<Rat>> solve_columns(const std::vector<std::vector<Rat>>& columns,
                                              const std::vector<Rat>& rhs);

// Row-echelon rank of dense rational column vectors.
int dense_column_rank(const std::vector<std::vector<Rat>>& columns);

// Invariant factors of an integer matrix (Smith normal form diagonal),
// nonzero entries only, each dividing the next.
std::vector<Int> smith_invariant_factors(std::vector<SparseColumn> columns, int rows);

} // namespace tropcol

#endif
