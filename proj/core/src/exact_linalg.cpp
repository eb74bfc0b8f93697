#include "tropcol/exact_linalg.hpp"

#include <algorithm>
#include <stdexcept>
#include <unordered_map>

namespace tropcol {

namespace {

// c -= f * p, both sorted by row.
SparseColumn axpy(const SparseColumn& c, const Rat& f, const SparseColumn& p) {
	SparseColumn out;
	out.reserve(c.size() + p.size());
	size_t i = 0, j = 0;
	while (i < c.size() || j < p.size()) {
		if (j == p.size() || (i < c.size() && c[i].first < p[j].first)) {
			out.push_back(c[i++]);
		} else if (i == c.size() || p[j].first < c[i].first) {
			out.emplace_back(p[j].first, Rat(-f * p[j].second));
			++j;
		} else {
			Rat v = c[i].second - f * p[j].second;
			if (v != 0) out.emplace_back(c[i].first, std::move(v));
			++i;
			++j;
		}
	}
	return out;
}

} // namespace

int rank_over_q(std::vector<SparseColumn> columns) {
	std::unordered_map<int, SparseColumn> pivot_of_row;
	int rank = 0;
	for (SparseColumn& col : columns) {
		while (!col.empty()) {
			int low = col.back().first;
			auto it = pivot_of_row.find(low);
			if (it == pivot_of_row.end()) {
				pivot_of_row.emplace(low, std::move(col));
				++rank;
				break;
			}
			Rat f = col.back().second / it->second.back().second;
			col = axpy(col, f, it->second);
		}
	}
	return rank;
}

std::optional<std::vector<Rat>> solve_columns(const std::vector<std::vector<Rat>>& columns,
                                              const std::vector<Rat>& rhs) {
	const int k = int(columns.size());
	const int m = int(rhs.size());
	for (const auto& c : columns)
		if (int(c.size()) != m) throw std::invalid_argument("solve_columns: column size mismatch");

	// augmented dense elimination, columns-major
	std::vector<std::vector<Rat>> a(k + 1);
	for (int j = 0; j < k; ++j) a[j] = columns[j];
	a[k] = rhs;

	std::vector<int> pivot_row(k, -1);
	std::vector<char> row_used(m, 0);
	int rank = 0;
	for (int j = 0; j < k; ++j) {
		int pr = -1;
		for (int r = 0; r < m; ++r)
			if (!row_used[r] && a[j][r] != 0) {
				pr = r;
				break;
			}
		if (pr < 0) throw std::invalid_argument("solve_columns: dependent columns");
		row_used[pr] = 1;
		pivot_row[j] = pr;
		++rank;
		Rat inv = 1 / a[j][pr];
		for (int jj = j; jj <= k; ++jj)
			if (a[jj][pr] != 0) a[jj][pr] *= inv;
		for (int r = 0; r < m; ++r) {
			if (r == pr || a[j][r] == 0) continue;
			Rat f = a[j][r];
			for (int jj = j; jj <= k; ++jj)
				if (a[jj][pr] != 0) a[jj][r] -= f * a[jj][pr];
		}
	}
	// consistency: rhs must be zero outside pivot rows
	for (int r = 0; r < m; ++r)
		if (!row_used[r] && a[k][r] != 0) return std::nullopt;
	std::vector<Rat> x(k);
	for (int j = 0; j < k; ++j) x[j] = a[k][pivot_row[j]];
	return x;
}

int dense_column_rank(const std::vector<std::vector<Rat>>& columns) {
	if (columns.empty()) return 0;
	std::vector<std::vector<Rat>> a = columns;
	const int m = int(a[0].size());
	std::vector<char> row_used(m, 0);
	int rank = 0;
	for (size_t j = 0; j < a.size(); ++j) {
		if (int(a[j].size()) != m) throw std::invalid_argument("dense_column_rank: ragged columns");
		int pr = -1;
		for (int r = 0; r < m; ++r)
			if (!row_used[r] && a[j][r] != 0) {
				pr = r;
				break;
			}
		if (pr < 0) continue;
		row_used[pr] = 1;
		++rank;
		for (size_t jj = j + 1; jj < a.size(); ++jj) {
			if (a[jj][pr] == 0) continue;
			Rat f = a[jj][pr] / a[j][pr];
			for (int r = 0; r < m; ++r)
				if (a[j][r] != 0) a[jj][r] -= f * a[j][r];
		}
	}
	return rank;
}

namespace {

struct DenseInt {
	int rows, cols;
	std::vector<Int> a;
	Int& at(int r, int c) { return a[size_t(r) * cols + c]; }
};

void swap_rows(DenseInt& m, int r1, int r2) {
	if (r1 == r2) return;
	for (int c = 0; c < m.cols; ++c) std::swap(m.at(r1, c), m.at(r2, c));
}

void swap_cols(DenseInt& m, int c1, int c2) {
	if (c1 == c2) return;
	for (int r = 0; r < m.rows; ++r) std::swap(m.at(r, c1), m.at(r, c2));
}

} // namespace

std::vector<Int> smith_invariant_factors(std::vector<SparseColumn> columns, int rows) {
	DenseInt m{rows, int(columns.size()), {}};
	m.a.assign(size_t(rows) * columns.size(), Int(0));
	for (int c = 0; c < int(columns.size()); ++c)
		for (const auto& [r, v] : columns[c]) {
			if (v.get_den() != 1)
				throw std::invalid_argument("smith_invariant_factors: matrix must be integral");
			m.at(r, c) = v.get_num();
		}

	std::vector<Int> factors;
	int t = 0;
	const int bound = std::min(m.rows, m.cols);
	while (t < bound) {
		// smallest nonzero |entry| in the trailing submatrix; 1 wins instantly
		int pi = -1, pj = -1;
		Int best;
		for (int r = t; r < m.rows && (pi < 0 || best != 1); ++r)
			for (int c = t; c < m.cols; ++c) {
				if (m.at(r, c) == 0) continue;
				Int v = abs(m.at(r, c));
				if (pi < 0 || v < best) {
					best = v;
					pi = r;
					pj = c;
					if (best == 1) break;
				}
			}
		if (pi < 0) break;
		swap_rows(m, t, pi);
		swap_cols(m, t, pj);

		bool dirty = true;
		while (dirty) {
			dirty = false;
			// clear column t
			for (int r = t + 1; r < m.rows; ++r) {
				if (m.at(r, t) == 0) continue;
				Int q = m.at(r, t) / m.at(t, t); // truncating
				if (q != 0)
					for (int c = t; c < m.cols; ++c) m.at(r, c) -= q * m.at(t, c);
				if (m.at(r, t) != 0) { // remainder became the smaller pivot
					swap_rows(m, t, r);
					dirty = true;
				}
			}
			// clear row t
			for (int c = t + 1; c < m.cols; ++c) {
				if (m.at(t, c) == 0) continue;
				Int q = m.at(t, c) / m.at(t, t);
				if (q != 0)
					for (int r = t; r < m.rows; ++r) m.at(r, c) -= q * m.at(r, t);
				if (m.at(t, c) != 0) {
					swap_cols(m, t, c);
					dirty = true;
				}
			}
		}
		// divisibility of the trailing submatrix
		bool redo = false;
		for (int r = t + 1; r < m.rows && !redo; ++r)
			for (int c = t + 1; c < m.cols && !redo; ++c)
				if (m.at(r, c) % m.at(t, t) != 0) {
					for (int cc = t; cc < m.cols; ++cc) m.at(t, cc) += m.at(r, cc);
					redo = true;
				}
		if (redo) continue; // re-pivot on the dirtied row
		factors.push_back(abs(m.at(t, t)));
		++t;
	}
	return factors;
}

} // namespace tropcol
