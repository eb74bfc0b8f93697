#include "tropcol/io.hpp"

#include <json.hpp>

#include <sstream>

namespace tropcol {

namespace {

using ordered_json = nlohmann::ordered_json;

ordered_json int_value(const Int& v) {
	if (v.fits_slong_p()) return ordered_json(v.get_si());
	return ordered_json(v.get_str());
}

ordered_json tree_obj(const PhyloTree& t, const Coloring& c) {
	ordered_json splits = ordered_json::array();
	for (size_t i = 0; i < t.splits.size(); ++i) {
		ordered_json s;
		s["members"] = t.splits[i].member_labels();
		s["length"] = to_string(t.lengths[i]);
		splits.push_back(std::move(s));
	}
	ordered_json j;
	j["N"] = t.leaf_count;
	j["n"] = c.n;
	j["d"] = c.d;
	j["splits"] = std::move(splits);
	return j;
}

} // namespace

std::string tree_to_json(const PhyloTree& t, const Coloring& c) {
	return tree_obj(t, c).dump();
}

std::pair<PhyloTree, Coloring> tree_from_json(const std::string& text) {
	ordered_json j;
	try {
		j = ordered_json::parse(text);
	} catch (const nlohmann::json::exception& e) {
		throw parse_error(std::string("tree JSON: ") + e.what());
	}
	try {
		int N = j.at("N").get<int>();
		Coloring c{j.at("n").get<int>(), j.at("d").get<int>()};
		if (c.leaf_count() != N)
			throw parse_error("tree JSON: N must equal n + d");
		std::vector<Split> splits;
		std::vector<Rat> lengths;
		for (const auto& s : j.at("splits")) {
			splits.push_back(make_split(N, s.at("members").get<std::vector<int>>()));
			lengths.push_back(parse_rational(s.at("length").get<std::string>()));
		}
		return {tree_from_splits(N, std::move(splits), std::move(lengths)), c};
	} catch (const nlohmann::json::exception& e) {
		throw parse_error(std::string("tree JSON: ") + e.what());
	}
}

std::string verdict_to_json(const CollinearityVerdict& v) {
	ordered_json j;
	j["collinear"] = v.collinear;
	if (v.collinear) {
		j["witness"] = nullptr;
	} else {
		j["witness"]["rows"] = v.witness_rows;
		j["witness"]["cols"] = v.witness_cols;
	}
	return j.dump();
}

std::string line_to_json(const MarkedLine& line, const Rat& residual_max_abs) {
	ordered_json j;
	j["tree"] = tree_obj(line.tree, line.coloring);
	ordered_json bp = ordered_json::array();
	for (const Rat& x : line.basepoint.coords) bp.push_back(to_string(x));
	j["basepoint"] = std::move(bp);
	j["residual_max_abs"] = to_string(residual_max_abs);
	return j.dump();
}

namespace {

ordered_json report_obj(const VerificationReport& report) {
	ordered_json j;
	j["d"] = report.coloring.d;
	j["n"] = report.coloring.n;
	if (report.homology) {
		j["betti"] = report.homology->reduced_betti;
		if (report.homology->integral) {
			ordered_json tor = ordered_json::array();
			for (const auto& dim : report.homology->torsion) {
				ordered_json factors = ordered_json::array();
				for (const Int& f : dim) factors.push_back(int_value(f));
				tor.push_back(std::move(factors));
			}
			j["torsion"] = std::move(tor);
		} else {
			j["torsion"] = nullptr;
		}
		j["face_counts"] = report.homology->face_counts;
	} else {
		j["betti"] = nullptr;
		j["torsion"] = nullptr;
		j["face_counts"] = nullptr;
	}
	j["rank_formula"] = report.rank_formula ? int_value(*report.rank_formula) : ordered_json();
	j["comb_count"] = report.comb_count ? int_value(*report.comb_count) : ordered_json();
	j["homology_facet_count"] =
	    report.homology_facet_count ? ordered_json(*report.homology_facet_count) : ordered_json();
	if (report.shelling) {
		if (report.shelling->verified) {
			j["shelling"] = "verified";
		} else {
			const auto& ce = *report.shelling->counterexample;
			ordered_json cj;
			cj["earlier_index"] = ce.earlier;
			cj["later_index"] = ce.later;
			cj["earlier"] = tree_obj(report.shelling->order[ce.earlier], report.coloring);
			cj["later"] = tree_obj(report.shelling->order[ce.later], report.coloring);
			j["shelling"]["counterexample"] = std::move(cj);
		}
	} else {
		j["shelling"] = nullptr;
	}
	j["consistent"] = report.consistent();
	return j;
}

} // namespace

std::string report_to_json(const VerificationReport& report) {
	return report_obj(report).dump();
}

std::string report_to_text(const VerificationReport& report) {
	std::ostringstream out;
	out << "d = " << report.coloring.d << ", n = " << report.coloring.n << "\n";
	if (report.homology) {
		out << "face counts:";
		for (auto f : report.homology->face_counts) out << ' ' << f;
		out << "\nreduced betti:";
		for (auto b : report.homology->reduced_betti) out << ' ' << b;
		out << "\n";
		if (report.homology->integral) {
			bool any = false;
			for (const auto& dim : report.homology->torsion) any = any || !dim.empty();
			out << "torsion: " << (any ? "PRESENT" : "none") << "\n";
		}
	}
	if (report.rank_formula) out << "rank by formula: " << report.rank_formula->get_str() << "\n";
	if (report.comb_count) out << "comb count: " << report.comb_count->get_str() << "\n";
	if (report.homology_facet_count)
		out << "homology facets: " << *report.homology_facet_count << "\n";
	if (report.shelling) {
		if (report.shelling->verified) {
			out << "shelling: verified (" << report.shelling->order.size() << " facets)\n";
		} else {
			out << "shelling: COUNTEREXAMPLE at pair (" << report.shelling->counterexample->earlier
			    << ", " << report.shelling->counterexample->later << ")\n";
		}
	}
	out << "consistent: " << (report.consistent() ? "yes" : "NO") << "\n";
	return out.str();
}

} // namespace tropcol
