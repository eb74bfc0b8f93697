#include "tropcol/evaluation.hpp"

#include "tropcol/exact_linalg.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <mutex>
#include <numeric>

namespace tropcol {

RatMatrix pi_split(const Split& s, const Coloring& c) {
	if (s.leaf_count != c.leaf_count())
		throw std::invalid_argument("pi_split: leaf count mismatch");
	RatMatrix m(c.d, c.n);
	// singleton and non-bicolored splits map to zero: either u vanishes, no
	// column picks u up, or u is the all-ones tropical scalar
	if (!s.is_non_singleton() || !is_bicolored(s, c)) return m;
	std::vector<bool> u(c.d, false);
	for (int i = 1; i <= c.d; ++i)
		if (leaf_in(s.members, c.n + i)) u[i - 1] = true;
	for (int j = 1; j <= c.n; ++j) {
		if (!leaf_in(s.members, j)) continue;
		for (int i = 0; i < c.d; ++i)
			if (u[i]) m.at(i, j - 1) = 1;
	}
	return m;
}

RatMatrix pi_tree(const PhyloTree& t, const Coloring& c) {
	if (t.leaf_count != c.leaf_count())
		throw std::invalid_argument("pi_tree: leaf count mismatch");
	RatMatrix sum(c.d, c.n);
	for (size_t k = 0; k < t.splits.size(); ++k) {
		RatMatrix part = pi_split(t.splits[k], c);
		for (int i = 0; i < c.d; ++i)
			for (int j = 0; j < c.n; ++j)
				if (part.at(i, j) != 0) sum.at(i, j) += t.lengths[k] * part.at(i, j);
	}
	return sum;
}

PointConfig ev_points(const MarkedLine& line) {
	const Coloring& c = line.coloring;
	if (line.basepoint.dim() != c.d)
		throw std::invalid_argument("ev_points: basepoint dimension mismatch");
	RatMatrix rel = pi_tree(line.tree, c);
	PointConfig pc;
	pc.basepoint_mode = BasepointMode::absolute;
	pc.points.reserve(c.n);
	for (int j = 0; j < c.n; ++j) {
		std::vector<Rat> v(c.d);
		for (int i = 0; i < c.d; ++i) v[i] = line.basepoint.coords[i] + rel.at(i, j);
		pc.points.push_back(normalize_point(v));
	}
	return pc;
}

RatMatrix relative_matrix(const PointConfig& pc, int dim) {
	if (pc.points.empty()) throw std::invalid_argument("relative_matrix: no points");
	if (pc.basepoint_mode == BasepointMode::relative_to_first) {
		for (const Rat& x : pc.points[0].coords)
			if (x != 0)
				throw std::invalid_argument("relative_matrix: point 1 must be zero in relative mode");
	}
	RatMatrix m(dim, pc.n());
	for (int j = 0; j < pc.n(); ++j) {
		const ProjectivePoint& p = pc.points[j];
		if (p.dim() != dim) throw std::invalid_argument("relative_matrix: point dimension mismatch");
		for (int i = 0; i < dim; ++i) {
			m.at(i, j) = pc.basepoint_mode == BasepointMode::relative_to_first
			                 ? p.coords[i]
			                 : p.coords[i] - pc.points[0].coords[i];
		}
	}
	return m;
}

namespace {

// Per-facet solver data. The normalized split matrices (first row dropped
// after subtracting it columnwise) are linearly independent on a facet, so
// each right-hand side has at most one coefficient vector.
struct FacetEntry {
	PhyloTree tree;
	std::vector<std::vector<Rat>> columns; // vectorized normalized pi_split per split
	// Per marked column j, the dense rank of each coordinate row under the
	// chain order of shared root-path prefixes; equal entries get equal
	// ranks. Any configuration with all lengths positive on this facet has
	// exactly this value-order signature in its relative matrix.
	std::vector<int> signature;
};

std::vector<Rat> vectorize_normalized(const RatMatrix& m) {
	// row 0 of the column-normalized matrix is identically zero; drop it
	RatMatrix norm = normalize_columns(m);
	std::vector<Rat> v;
	v.reserve(size_t(m.rows() - 1) * m.cols());
	for (int i = 1; i < m.rows(); ++i)
		for (int j = 0; j < m.cols(); ++j)
			v.push_back(norm.at(i, j));
	return v;
}

template <typename Value>
std::vector<int> dense_ranks_per_column(int d, int n, const std::function<Value(int, int)>& at) {
	std::vector<int> sig;
	sig.reserve(size_t(d) * n);
	std::vector<Value> vals(d);
	std::vector<int> idx(d);
	for (int j = 0; j < n; ++j) {
		for (int i = 0; i < d; ++i) vals[i] = at(i, j);
		std::iota(idx.begin(), idx.end(), 0);
		std::sort(idx.begin(), idx.end(), [&](int a, int b) { return vals[a] < vals[b]; });
		std::vector<int> rank(d, 0);
		int r = 0;
		for (int k = 0; k < d; ++k) {
			if (k > 0 && vals[idx[k]] != vals[idx[k - 1]]) ++r;
			rank[idx[k]] = r;
		}
		for (int i = 0; i < d; ++i) sig.push_back(rank[i]);
	}
	return sig;
}

std::uint64_t hash_signature(const std::vector<int>& sig) {
	std::uint64_t h = 1469598103934665603ull;
	for (int v : sig) {
		h ^= std::uint64_t(v) + 1;
		h *= 1099511628211ull;
	}
	return h;
}

struct EvalIndex {
	Coloring coloring;
	std::vector<FacetEntry> facets;
	std::map<std::uint64_t, std::vector<int>> by_signature;
};

// Chain-depth signature of a facet: entry (i, j) counts the splits
// containing both marked leaf j and unmarked leaf n+i. For fixed j these
// prefix sets are nested, so the counts order the raw evaluation entries for
// every choice of positive lengths.
std::vector<int> facet_signature(const PhyloTree& t, const Coloring& c) {
	std::function<int(int, int)> depth = [&](int i, int j) {
		int cnt = 0;
		for (const Split& s : t.splits)
			if (leaf_in(s.members, j + 1) && leaf_in(s.members, c.n + i + 1)) ++cnt;
		return cnt;
	};
	return dense_ranks_per_column<int>(c.d, c.n, depth);
}

const EvalIndex& eval_index(const Coloring& c) {
	static std::mutex mu;
	static std::map<std::pair<int, int>, EvalIndex> cache;
	std::lock_guard<std::mutex> lock(mu);
	auto key = std::make_pair(c.n, c.d);
	auto it = cache.find(key);
	if (it != cache.end()) return it->second;

	EvalIndex idx;
	idx.coloring = c;
	if (c.n >= 1 && c.d >= 1 && c.leaf_count() >= 4) {
		for (const PhyloTree& t : enumerate_facets(c)) {
			FacetEntry e;
			e.tree = t;
			e.columns.reserve(t.splits.size());
			for (const Split& s : t.splits) e.columns.push_back(vectorize_normalized(pi_split(s, c)));
			e.signature = facet_signature(t, c);
			idx.facets.push_back(std::move(e));
		}
		for (size_t i = 0; i < idx.facets.size(); ++i)
			idx.by_signature[hash_signature(idx.facets[i].signature)].push_back(int(i));
	}
	return cache.emplace(key, std::move(idx)).first->second;
}

std::vector<Rat> vectorize_relative(const RatMatrix& rel) {
	std::vector<Rat> v;
	v.reserve(size_t(rel.rows() - 1) * rel.cols());
	for (int i = 1; i < rel.rows(); ++i)
		for (int j = 0; j < rel.cols(); ++j)
			v.push_back(rel.at(i, j));
	return v;
}

// Tries one facet: the unique coefficient vector, if consistent and
// nonnegative, yields the canonical tree as its positive support.
std::optional<MarkedLine> try_facet(const FacetEntry& f, const Coloring& c,
                                    const std::vector<Rat>& rhs, const RatMatrix& rel,
                                    const ProjectivePoint& basepoint) {
	auto sol = solve_columns(f.columns, rhs);
	if (!sol) return std::nullopt;
	std::vector<Split> splits;
	std::vector<Rat> lengths;
	for (size_t k = 0; k < sol->size(); ++k) {
		if ((*sol)[k] < 0) return std::nullopt;
		if ((*sol)[k] > 0) {
			splits.push_back(f.tree.splits[k]);
			lengths.push_back((*sol)[k]);
		}
	}
	MarkedLine line{c, tree_from_splits(c.leaf_count(), std::move(splits), std::move(lengths)),
	                basepoint};
	// the verification residual must vanish identically
	if (normalize_columns(pi_tree(line.tree, c)) != normalize_columns(rel)) return std::nullopt;
	return line;
}

} // namespace

MarkedLine canonical_tree(const PointConfig& pc, int dim) {
	if (pc.points.empty()) throw std::invalid_argument("canonical_tree: no points");
	const int n = pc.n();
	const int d = dim;
	Coloring c{n, d};
	if (c.leaf_count() > kCanonicalTreeMaxLeaves)
		throw resource_cap_exceeded("canonical_tree: n + d = " + std::to_string(c.leaf_count()) +
		                            " exceeds the supported cap of " +
		                            std::to_string(kCanonicalTreeMaxLeaves) + " leaves");

	RatMatrix rel = relative_matrix(pc, dim);
	CollinearityVerdict verdict = tropical_rank_le2(rel);
	if (!verdict.collinear) throw not_collinear(verdict);

	ProjectivePoint basepoint = pc.basepoint_mode == BasepointMode::relative_to_first
	                                ? ProjectivePoint{std::vector<Rat>(d, Rat(0))}
	                                : pc.points[0];

	if (rel.is_zero()) return MarkedLine{c, PhyloTree{c.leaf_count(), {}, {}}, basepoint};

	const EvalIndex& idx = eval_index(c);
	std::vector<Rat> rhs = vectorize_relative(rel);

	// fast path: facets whose length-free value-order signature matches the
	// input exactly (always the case when the answer is a full facet)
	std::function<Rat(int, int)> at = [&](int i, int j) { return rel.at(i, j); };
	std::vector<int> sig = dense_ranks_per_column<Rat>(d, n, at);
	if (auto it = idx.by_signature.find(hash_signature(sig)); it != idx.by_signature.end()) {
		for (int fi : it->second) {
			if (idx.facets[fi].signature != sig) continue;
			if (auto line = try_facet(idx.facets[fi], c, rhs, rel, basepoint)) return *line;
		}
	}
	// complete search: the canonical tree is a subset of some facet, and on
	// that facet the unique coefficient vector is nonnegative with the tree
	// as its positive support
	for (const FacetEntry& f : idx.facets)
		if (auto line = try_facet(f, c, rhs, rel, basepoint)) return *line;

	throw std::logic_error("canonical_tree: no bicolored cone contains the configuration");
}

} // namespace tropcol
