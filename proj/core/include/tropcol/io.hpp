#ifndef TROPCOL_IO_HPP
#define TROPCOL_IO_HPP

#include "tropcol/evaluation.hpp"
#include "tropcol/verification.hpp"

#include <string>
#include <utility>

namespace tropcol {

// Tree JSON: {"N":, "n":, "d":, "splits": [{"members": [..], "length": "p/q"}, ..]}
// Member lists exclude leaf 1; lengths are positive rationals as strings.
std::string tree_to_json(const PhyloTree& t, const Coloring& c);
std::pair<PhyloTree, Coloring> tree_from_json(const std::string& text);

// {"collinear":, "witness": null | {"rows": [..], "cols": [..]}}
std::string verdict_to_json(const CollinearityVerdict& v);

// {"tree":, "basepoint": [..], "residual_max_abs": "0"}
std::string line_to_json(const MarkedLine& line, const Rat& residual_max_abs);

// {"d":, "n":, "betti":, "torsion":, "rank_formula":, "comb_count":,
//  "homology_facet_count":, "shelling": "verified" | {"counterexample":}}
// Fields that were not computed are null.
std::string report_to_json(const VerificationReport& report);
std::string report_to_text(const VerificationReport& report);

} // namespace tropcol

#endif
