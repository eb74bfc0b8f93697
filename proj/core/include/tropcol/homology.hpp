#ifndef TROPCOL_HOMOLOGY_HPP
#define TROPCOL_HOMOLOGY_HPP

#include "tropcol/complex.hpp"
#include "tropcol/rational.hpp"

#include <cstdint>
#include <vector>

namespace tropcol {

enum class Coefficients { rational_field, integers };

struct HomologyReport {
	Coloring coloring;
	std::vector<std::int64_t> face_counts;         // by dimension
	std::vector<std::int64_t> reduced_betti;       // by dimension 0..top
	bool integral = false;                         // Smith normal form ran
	std::vector<std::vector<Int>> torsion;         // invariant factors > 1 per dimension
	Int rank_formula;                              // closed form
	Int comb_count;                                // independent enumeration
};

// Reduced Betti numbers from exact boundary-matrix ranks over Q, or over Z
// via Smith normal form (which additionally reports torsion; none is
// expected). The total face count is guarded by max_faces; instances above
// it are refused with the counts in the message.
constexpr std::int64_t kDefaultFaceCap = 500000;
HomologyReport betti_numbers(const CollinearComplex& cx,
                             Coefficients coeff = Coefficients::rational_field,
                             std::int64_t max_faces = kDefaultFaceCap);

// Reduced Euler characteristic from the face counts must equal
// (-1)^(n+d-4) times the top homology rank.
bool euler_check(const HomologyReport& report);

} // namespace tropcol

#endif
