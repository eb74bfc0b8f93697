#ifndef TROPCOL_VERIFICATION_HPP
#define TROPCOL_VERIFICATION_HPP

#include "tropcol/combs.hpp"
#include "tropcol/complex.hpp"
#include "tropcol/homology.hpp"

#include <cstdint>
#include <optional>

namespace tropcol {

struct VerificationOptions {
	bool run_formula = true;
	bool run_combs = true;
	bool run_boundary = true;   // exact boundary-matrix Betti numbers over Q
	bool run_integral = false;  // Smith normal form, reports torsion
	bool run_shelling = true;
	std::int64_t max_faces = kDefaultFaceCap;
};

// Everything the cross-checks produce for one (d, n). Fields are unset when
// the corresponding method was not requested.
struct VerificationReport {
	Coloring coloring;
	std::optional<Int> rank_formula;
	std::optional<Int> comb_count;
	std::optional<HomologyReport> homology;
	std::optional<ShellingReport> shelling;
	std::optional<std::int64_t> homology_facet_count;

	// True iff every computed top-rank value agrees, sub-top reduced Betti
	// numbers vanish, the shelling verified, and no torsion appeared.
	bool consistent() const;
};

VerificationReport run_verification(const Coloring& c, const VerificationOptions& opts = {});

// Refuses facet enumeration whose tree count (2N-5)!! is out of proportion
// to the face cap, before any work is done.
void check_enumeration_bound(const Coloring& c, std::int64_t max_faces);

} // namespace tropcol

#endif
