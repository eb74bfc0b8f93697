// tropcol: tropical collinearity, canonical lines, and the topology of the
// space of collinear configurations.

#include "tropcol/io.hpp"

#include <cstring>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

namespace {

using namespace tropcol;

constexpr int kExitOk = 0;
constexpr int kExitNegative = 1;
constexpr int kExitInputError = 2;
constexpr int kExitResourceCap = 3;

void print_usage(std::ostream& out) {
	out << "usage: tropcol <command> [arguments] [flags]\n"
	       "\n"
	       "commands:\n"
	       "  collinear <matrix-file>       decide tropical collinearity of the columns\n"
	       "  canonical-line <matrix-file>  the canonical tropical line through the columns\n"
	       "  facets <d> <n>                facet trees of the collinear complex, in\n"
	       "                                shelling order\n"
	       "  verify-shelling <d> <n>       verify the shelling order and cross-check all\n"
	       "                                homology rank methods\n"
	       "  homology <d> <n>              homology of the collinear complex\n"
	       "  rank-table <max_d> <max_n>    table of top homology ranks\n"
	       "\n"
	       "flags:\n"
	       "  --format json|text            output format (default json)\n"
	       "  --cap <faces>                 face-count guard (default 500000)\n"
	       "  --method formula|combs|boundary|all\n"
	       "                                rank methods for homology (default all)\n"
	       "  --integral                    also run the integer Smith normal form path\n"
	       "\n"
	       "exit codes: 0 success/affirmative, 1 negative verdict, 2 input error,\n"
	       "            3 resource cap exceeded\n";
}

struct Options {
	std::string command;
	std::vector<std::string> args;
	std::string format = "json";
	std::string method = "all";
	bool integral = false;
	std::int64_t cap = kDefaultFaceCap;
};

Options parse_options(int argc, char** argv) {
	Options o;
	if (argc < 2) throw parse_error("missing command");
	o.command = argv[1];
	if (o.command == "--help" || o.command == "-h") o.command = "help";
	for (int i = 2; i < argc; ++i) {
		std::string a = argv[i];
		auto value = [&](const char* flag) {
			if (++i >= argc) throw parse_error(std::string(flag) + " needs a value");
			return std::string(argv[i]);
		};
		if (a == "--format") {
			o.format = value("--format");
			if (o.format != "json" && o.format != "text")
				throw parse_error("--format must be json or text");
		} else if (a == "--cap") {
			try {
				o.cap = std::stoll(value("--cap"));
			} catch (const std::exception&) {
				throw parse_error("--cap needs an integer");
			}
			if (o.cap < 1) throw parse_error("--cap must be positive");
		} else if (a == "--method") {
			o.method = value("--method");
			if (o.method != "formula" && o.method != "combs" && o.method != "boundary" &&
			    o.method != "all")
				throw parse_error("--method must be formula, combs, boundary or all");
		} else if (a == "--integral") {
			o.integral = true;
		} else if (a == "--help" || a == "-h") {
			o.command = "help";
		} else if (!a.empty() && a[0] == '-') {
			throw parse_error("unknown flag '" + a + "'");
		} else {
			o.args.push_back(a);
		}
	}
	return o;
}

RatMatrix load_matrix(const std::string& path) {
	std::ifstream in(path);
	if (!in) throw parse_error("cannot open '" + path + "'");
	return read_matrix(in);
}

int positive_int_arg(const std::string& s, const char* what) {
	try {
		size_t used = 0;
		int v = std::stoi(s, &used);
		if (used != s.size() || v < 1) throw std::invalid_argument(s);
		return v;
	} catch (const std::exception&) {
		throw parse_error(std::string(what) + " must be a positive integer, got '" + s + "'");
	}
}

PointConfig config_from_matrix(const RatMatrix& m) {
	PointConfig pc;
	pc.basepoint_mode = BasepointMode::absolute;
	for (int j = 0; j < m.cols(); ++j) {
		std::vector<Rat> v(m.rows());
		for (int i = 0; i < m.rows(); ++i) v[i] = m.at(i, j);
		pc.points.push_back(normalize_point(v));
	}
	return pc;
}

int cmd_collinear(const Options& o) {
	if (o.args.size() != 1) throw parse_error("collinear expects one matrix file");
	RatMatrix m = load_matrix(o.args[0]);
	CollinearityVerdict v = tropical_rank_le2(m);
	if (o.format == "json") {
		std::cout << verdict_to_json(v) << "\n";
	} else if (v.collinear) {
		std::cout << "collinear\n";
	} else {
		std::cout << "not collinear: nonsingular minor at rows " << v.witness_rows[0] << ","
		          << v.witness_rows[1] << "," << v.witness_rows[2] << " cols " << v.witness_cols[0]
		          << "," << v.witness_cols[1] << "," << v.witness_cols[2] << "\n";
	}
	return v.collinear ? kExitOk : kExitNegative;
}

std::string facet_members_line(const PhyloTree& t) {
	std::string s;
	for (size_t i = 0; i < t.splits.size(); ++i) {
		if (i) s += '|';
		auto labels = t.splits[i].member_labels();
		for (size_t j = 0; j < labels.size(); ++j) {
			if (j) s += ',';
			s += std::to_string(labels[j]);
		}
	}
	return s;
}

int cmd_canonical_line(const Options& o) {
	if (o.args.size() != 1) throw parse_error("canonical-line expects one matrix file");
	RatMatrix m = load_matrix(o.args[0]);
	PointConfig pc = config_from_matrix(m);
	try {
		MarkedLine line = canonical_tree(pc, m.rows());
		// residual of the reconstruction; exactly zero by contract
		RatMatrix residual = normalize_columns(pi_tree(line.tree, line.coloring)) +
		                     Rat(-1) * normalize_columns(relative_matrix(pc, m.rows()));
		Rat max_abs = 0;
		for (int i = 0; i < residual.rows(); ++i)
			for (int j = 0; j < residual.cols(); ++j)
				if (abs(residual.at(i, j)) > max_abs) max_abs = abs(residual.at(i, j));
		if (o.format == "json") {
			std::cout << line_to_json(line, max_abs) << "\n";
		} else {
			std::cout << "canonical line on " << line.coloring.leaf_count() << " leaves, "
			          << line.tree.splits.size() << " splits\n";
			for (size_t i = 0; i < line.tree.splits.size(); ++i) {
				std::cout << "  {";
				auto labels = line.tree.splits[i].member_labels();
				for (size_t j = 0; j < labels.size(); ++j)
					std::cout << (j ? "," : "") << labels[j];
				std::cout << "}  length " << to_string(line.tree.lengths[i]) << "\n";
			}
			std::cout << "basepoint:";
			for (const Rat& x : line.basepoint.coords) std::cout << ' ' << to_string(x);
			std::cout << "\nresidual max abs: " << to_string(max_abs) << "\n";
		}
		return kExitOk;
	} catch (const not_collinear& e) {
		if (o.format == "json") std::cout << verdict_to_json(e.verdict) << "\n";
		else
			std::cout << "not collinear: nonsingular minor at rows " << e.verdict.witness_rows[0]
			          << "," << e.verdict.witness_rows[1] << "," << e.verdict.witness_rows[2]
			          << " cols " << e.verdict.witness_cols[0] << "," << e.verdict.witness_cols[1]
			          << "," << e.verdict.witness_cols[2] << "\n";
		return kExitNegative;
	}
}

int cmd_facets(const Options& o) {
	if (o.args.size() != 2) throw parse_error("facets expects d and n");
	int d = positive_int_arg(o.args[0], "d");
	int n = positive_int_arg(o.args[1], "n");
	Coloring c{n, d};
	check_enumeration_bound(c, o.cap);
	std::vector<PhyloTree> facets = sort_facets(c);
	if (o.format == "json") {
		std::string out = "{\"d\":" + std::to_string(d) + ",\"n\":" + std::to_string(n) +
		                  ",\"count\":" + std::to_string(facets.size()) + ",\"facets\":[";
		for (size_t i = 0; i < facets.size(); ++i) {
			if (i) out += ',';
			out += tree_to_json(facets[i], c);
		}
		out += "]}";
		std::cout << out << "\n";
	} else {
		for (const PhyloTree& t : facets) std::cout << facet_members_line(t) << "\n";
	}
	return kExitOk;
}

VerificationOptions method_options(const Options& o, bool with_shelling) {
	VerificationOptions opts;
	opts.max_faces = o.cap;
	opts.run_shelling = with_shelling;
	opts.run_formula = o.method == "formula" || o.method == "all";
	opts.run_combs = o.method == "combs" || o.method == "all";
	opts.run_boundary = o.method == "boundary" || o.method == "all";
	opts.run_integral = o.integral && opts.run_boundary;
	return opts;
}

int cmd_report(const Options& o, bool with_shelling) {
	if (o.args.size() != 2)
		throw parse_error(std::string(with_shelling ? "verify-shelling" : "homology") +
		                  " expects d and n");
	int d = positive_int_arg(o.args[0], "d");
	int n = positive_int_arg(o.args[1], "n");
	VerificationReport report = run_verification(Coloring{n, d}, method_options(o, with_shelling));
	std::cout << (o.format == "json" ? report_to_json(report) : report_to_text(report));
	if (o.format == "json") std::cout << "\n";
	return report.consistent() ? kExitOk : kExitNegative;
}

int cmd_rank_table(const Options& o) {
	if (o.args.size() != 2) throw parse_error("rank-table expects max_d and max_n");
	int max_d = positive_int_arg(o.args[0], "max_d");
	int max_n = positive_int_arg(o.args[1], "max_n");
	std::vector<std::vector<Int>> table(max_d, std::vector<Int>(max_n));
	for (int d = 1; d <= max_d; ++d)
		for (int n = 1; n <= max_n; ++n)
			table[d - 1][n - 1] = homology_rank_formula(Coloring{n, d});
	if (o.format == "json") {
		std::string out = "{\"max_d\":" + std::to_string(max_d) +
		                  ",\"max_n\":" + std::to_string(max_n) + ",\"table\":[";
		for (int d = 0; d < max_d; ++d) {
			if (d) out += ',';
			out += '[';
			for (int n = 0; n < max_n; ++n) {
				if (n) out += ',';
				out += table[d][n].get_str();
			}
			out += ']';
		}
		out += "]}";
		std::cout << out << "\n";
	} else {
		std::cout << "d\\n";
		for (int n = 1; n <= max_n; ++n) std::cout << '\t' << n;
		std::cout << "\n";
		for (int d = 1; d <= max_d; ++d) {
			std::cout << d;
			for (int n = 1; n <= max_n; ++n) std::cout << '\t' << table[d - 1][n - 1].get_str();
			std::cout << "\n";
		}
	}
	return kExitOk;
}

} // namespace

int main(int argc, char** argv) {
	try {
		Options o = parse_options(argc, argv);
		if (o.command == "help") {
			print_usage(std::cout);
			return kExitOk;
		}
		if (o.command == "collinear") return cmd_collinear(o);
		if (o.command == "canonical-line") return cmd_canonical_line(o);
		if (o.command == "facets") return cmd_facets(o);
		if (o.command == "verify-shelling") return cmd_report(o, true);
		if (o.command == "homology") return cmd_report(o, false);
		if (o.command == "rank-table") return cmd_rank_table(o);
		throw parse_error("unknown command '" + o.command + "'");
	} catch (const tropcol::parse_error& e) {
		std::cerr << "error";
		if (e.line > 0) {
			std::cerr << " at line " << e.line;
			if (e.column > 0) std::cerr << ", column " << e.column;
		}
		std::cerr << ": " << e.what() << "\n";
		if (e.line == 0) std::cerr << "run 'tropcol --help' for usage\n";
		return kExitInputError;
	} catch (const tropcol::resource_cap_exceeded& e) {
		std::cerr << "error: " << e.what() << "\n";
		return kExitResourceCap;
	} catch (const std::exception& e) {
		std::cerr << "error: " << e.what() << "\n";
		return kExitInputError;
	}
}
