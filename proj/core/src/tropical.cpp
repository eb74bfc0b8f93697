#include "tropcol/tropical.hpp"

namespace tropcol {

namespace {

// All permutations of {0,1,2} with a fixed listing order.
constexpr int kPerms[6][3] = {{0, 1, 2}, {0, 2, 1}, {1, 0, 2}, {1, 2, 0}, {2, 0, 1}, {2, 1, 0}};

} // namespace

bool trop_det3_is_singular(const std::array<std::array<Rat, 3>, 3>& m) {
	Rat best;
	int hits = 0;
	for (const auto& p : kPerms) {
		Rat s = m[0][p[0]] + m[1][p[1]] + m[2][p[2]];
		if (hits == 0 || s < best) {
			best = s;
			hits = 1;
		} else if (s == best) {
			++hits;
		}
	}
	return hits >= 2;
}

CollinearityVerdict tropical_rank_le2(const RatMatrix& m) {
	CollinearityVerdict v;
	if (m.rows() < 3 || m.cols() < 3) return v;
	std::array<std::array<Rat, 3>, 3> minor;
	for (int r0 = 0; r0 < m.rows(); ++r0)
		for (int r1 = r0 + 1; r1 < m.rows(); ++r1)
			for (int r2 = r1 + 1; r2 < m.rows(); ++r2)
				for (int c0 = 0; c0 < m.cols(); ++c0)
					for (int c1 = c0 + 1; c1 < m.cols(); ++c1)
						for (int c2 = c1 + 1; c2 < m.cols(); ++c2) {
							const int rs[3] = {r0, r1, r2};
							const int cs[3] = {c0, c1, c2};
							for (int i = 0; i < 3; ++i)
								for (int j = 0; j < 3; ++j)
									minor[i][j] = m.at(rs[i], cs[j]);
							if (!trop_det3_is_singular(minor)) {
								v.collinear = false;
								v.witness_rows = {r0 + 1, r1 + 1, r2 + 1};
								v.witness_cols = {c0 + 1, c1 + 1, c2 + 1};
								return v;
							}
						}
	return v;
}

} // namespace tropcol
