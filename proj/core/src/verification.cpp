#include "tropcol/verification.hpp"

namespace tropcol {

void check_enumeration_bound(const Coloring& c, std::int64_t max_faces) {
	Int bound = 1;
	for (int k = 2 * c.leaf_count() - 5; k > 1; k -= 2) bound *= k;
	if (bound > Int(50) * Int(long(max_faces)))
		throw resource_cap_exceeded(
		    "facet enumeration visits " + bound.get_str() + " trees on " +
		    std::to_string(c.leaf_count()) + " leaves, out of proportion to the face cap of " +
		    std::to_string(max_faces));
}

bool VerificationReport::consistent() const {
	std::optional<Int> top;
	auto check = [&](const Int& value) {
		if (!top) top = value;
		return *top == value;
	};
	if (rank_formula && !check(*rank_formula)) return false;
	if (comb_count && !check(*comb_count)) return false;
	if (homology) {
		const auto& betti = homology->reduced_betti;
		Int top_betti = betti.empty() ? Int(0) : Int(betti.back());
		if (!check(top_betti)) return false;
		for (size_t k = 0; k + 1 < betti.size(); ++k)
			if (betti[k] != 0) return false;
		for (const auto& dim : homology->torsion)
			if (!dim.empty()) return false;
	}
	if (shelling && !shelling->verified) return false;
	if (homology_facet_count && !check(Int(long(*homology_facet_count)))) return false;
	return true;
}

VerificationReport run_verification(const Coloring& c, const VerificationOptions& opts) {
	VerificationReport report;
	report.coloring = c;
	if (opts.run_formula) report.rank_formula = homology_rank_formula(c);
	if (opts.run_combs) report.comb_count = count_combs(c);
	if (opts.run_boundary || opts.run_integral || opts.run_shelling) {
		CollinearComplex cx = build_complex(c);
		if (opts.run_boundary || opts.run_integral)
			report.homology = betti_numbers(
			    cx, opts.run_integral ? Coefficients::integers : Coefficients::rational_field,
			    opts.max_faces);
		if (opts.run_shelling) {
			check_enumeration_bound(c, opts.max_faces);
			std::vector<PhyloTree> order = sort_facets(c);
			if (std::int64_t(order.size()) > opts.max_faces)
				throw resource_cap_exceeded("shelling verification on " +
				                            std::to_string(order.size()) +
				                            " facets exceeds the face cap of " +
				                            std::to_string(opts.max_faces));
			report.shelling = verify_shelling(cx, order);
			if (report.shelling->verified)
				report.homology_facet_count = std::int64_t(homology_facets(*report.shelling).size());
		}
	}
	return report;
}

} // namespace tropcol
