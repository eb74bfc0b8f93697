// End-to-end checks of the command line tool: exit codes, JSON shape, and
// byte-for-byte determinism.

#include <doctest.h>

#include <sys/wait.h>

#include <array>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <string>

namespace {

struct RunResult {
	int exit_code;
	std::string output; // stdout + stderr
};

RunResult run_cli(const std::string& args) {
	std::string cmd = std::string(TROPCOL_CLI_PATH) + " " + args + " 2>&1";
	FILE* pipe = popen(cmd.c_str(), "r");
	REQUIRE(pipe != nullptr);
	std::string out;
	std::array<char, 4096> buf;
	size_t got;
	while ((got = fread(buf.data(), 1, buf.size(), pipe)) > 0) out.append(buf.data(), got);
	int status = pclose(pipe);
	return RunResult{WEXITSTATUS(status), out};
}

std::string write_temp(const std::string& name, const std::string& content) {
	std::string path = "/tmp/tropcol_test_" + name;
	std::ofstream f(path);
	f << content;
	return path;
}

} // namespace

TEST_CASE("collinear: affirmative, negative and parse-error exits") {
	std::string two_rows = write_temp("2rows.mat", "0 1 2 3\n4 5 6 7\n");
	RunResult r = run_cli("collinear " + two_rows);
	CHECK(r.exit_code == 0);
	CHECK(r.output.find("\"collinear\":true") != std::string::npos);

	std::string bad = write_temp("bad.mat", "0 1 2\n1 0 2\n2 2 0\n");
	r = run_cli("collinear " + bad);
	CHECK(r.exit_code == 1);
	CHECK(r.output.find("\"rows\":[1,2,3]") != std::string::npos);
	CHECK(r.output.find("\"cols\":[1,2,3]") != std::string::npos);

	std::string malformed = write_temp("malformed.mat", "1 1/0\n");
	r = run_cli("collinear " + malformed);
	CHECK(r.exit_code == 2);
	CHECK(r.output.find("line 1") != std::string::npos);

	r = run_cli("collinear /nonexistent/path.mat");
	CHECK(r.exit_code == 2);
}

TEST_CASE("canonical-line on the worked example") {
	std::string mat = write_temp("pi.mat", "0 0 0 0 0\n0 0 0 0 0\n0 1 0 1 1\n");
	RunResult r = run_cli("canonical-line " + mat);
	CHECK(r.exit_code == 0);
	CHECK(r.output.find("\"members\":[2,4,5,8]") != std::string::npos);
	CHECK(r.output.find("\"length\":\"1\"") != std::string::npos);
	CHECK(r.output.find("\"residual_max_abs\":\"0\"") != std::string::npos);

	std::string bad = write_temp("bad2.mat", "0 1 2\n1 0 2\n2 2 0\n");
	r = run_cli("canonical-line " + bad);
	CHECK(r.exit_code == 1);
	CHECK(r.output.find("\"collinear\":false") != std::string::npos);

	// coincident points sit on the star tree, basepoint = the point
	std::string same = write_temp("same.mat", "1 1 1 1\n2 2 2 2\n5 5 5 5\n");
	r = run_cli("canonical-line " + same);
	CHECK(r.exit_code == 0);
	CHECK(r.output.find("\"splits\":[]") != std::string::npos);
	CHECK(r.output.find("\"basepoint\":[\"0\",\"1\",\"4\"]") != std::string::npos);
}

TEST_CASE("canonical-line is translation invariant in the tree part") {
	// same configuration shifted by (1, 2, 3): identical tree, shifted basepoint
	std::string a = write_temp("shift_a.mat", "0 0 0\n0 0 0\n0 1 1\n");
	std::string b = write_temp("shift_b.mat", "1 1 1\n2 2 2\n3 4 4\n");
	RunResult ra = run_cli("canonical-line " + a);
	RunResult rb = run_cli("canonical-line " + b);
	CHECK(ra.exit_code == 0);
	CHECK(rb.exit_code == 0);
	auto tree_of = [](const std::string& s) {
		size_t from = s.find("\"splits\"");
		return s.substr(from, s.find(",\"basepoint\"") - from);
	};
	CHECK(tree_of(ra.output) == tree_of(rb.output));
}

TEST_CASE("facets: count and deterministic order") {
	RunResult r = run_cli("facets 3 3 --format text");
	CHECK(r.exit_code == 0);
	// 42 facets, first and last frozen
	CHECK(r.output.find("2,3,4|2,3,4,5|2,4\n") == 0);
	CHECK(r.output.find("2,3,5,6|3,5,6|3,6\n") != std::string::npos);
	RunResult again = run_cli("facets 3 3 --format text");
	CHECK(again.output == r.output);

	RunResult json = run_cli("facets 3 3");
	CHECK(json.output.find("\"count\":42") != std::string::npos);
}

TEST_CASE("verify-shelling: reports and exit codes") {
	RunResult r = run_cli("verify-shelling 3 3 --integral");
	CHECK(r.exit_code == 0);
	CHECK(r.output.find("\"shelling\":\"verified\"") != std::string::npos);
	CHECK(r.output.find("\"rank_formula\":5") != std::string::npos);
	CHECK(r.output.find("\"betti\":[0,0,5]") != std::string::npos);

	// degenerate instance: empty complex, rank 0, exit 0
	r = run_cli("verify-shelling 1 5");
	CHECK(r.exit_code == 0);
	CHECK(r.output.find("\"rank_formula\":0") != std::string::npos);

	// the largest instance the acceptance run covers
	r = run_cli("verify-shelling 4 4");
	CHECK(r.exit_code == 0);
	CHECK(r.output.find("\"rank_formula\":73") != std::string::npos);
	CHECK(r.output.find("\"homology_facet_count\":73") != std::string::npos);
	CHECK(r.output.find("\"betti\":[0,0,0,0,73]") != std::string::npos);

	// cap exceeded
	r = run_cli("verify-shelling 3 3 --cap 10");
	CHECK(r.exit_code == 3);

	// bad arguments
	r = run_cli("verify-shelling 0 3");
	CHECK(r.exit_code == 2);
	r = run_cli("verify-shelling 3");
	CHECK(r.exit_code == 2);
}

TEST_CASE("homology: method selection") {
	RunResult r = run_cli("homology 4 4 --method formula");
	CHECK(r.exit_code == 0);
	CHECK(r.output.find("\"rank_formula\":73") != std::string::npos);
	CHECK(r.output.find("\"betti\":null") != std::string::npos);

	r = run_cli("homology 3 3 --method all --integral");
	CHECK(r.exit_code == 0);
	CHECK(r.output.find("\"betti\":[0,0,5]") != std::string::npos);
	CHECK(r.output.find("\"torsion\":[[],[],[]]") != std::string::npos);

	r = run_cli("homology 3 3 --method boundary");
	CHECK(r.exit_code == 0);
	CHECK(r.output.find("\"comb_count\":null") != std::string::npos);
}

TEST_CASE("rank-table reproduces the closed form") {
	RunResult r = run_cli("rank-table 4 5");
	CHECK(r.exit_code == 0);
	// row d=3: 2^n - 3 for n = 3, 4, 5; entry (4,5) = 301
	CHECK(r.output.find("[0,1,5,13,29]") != std::string::npos);
	CHECK(r.output.find("301") != std::string::npos);
	RunResult text = run_cli("rank-table 5 5 --format text");
	CHECK(text.exit_code == 0);
	// symmetric table
	CHECK(text.output.find("301") != std::string::npos);
}

TEST_CASE("usage and unknown commands") {
	CHECK(run_cli("--help").exit_code == 0);
	CHECK(run_cli("frobnicate 1 2").exit_code == 2);
	CHECK(run_cli("homology 3 3 --method nonsense").exit_code == 2);
}

TEST_CASE("json outputs are byte-for-byte deterministic") {
	for (const char* cmd : {"verify-shelling 3 3", "homology 2 4", "rank-table 3 6"}) {
		RunResult a = run_cli(cmd);
		RunResult b = run_cli(cmd);
		CHECK(a.output == b.output);
		CHECK(a.exit_code == b.exit_code);
	}
}
