#include "tropcol/complex.hpp"

#include <algorithm>
#include <bit>

namespace tropcol {

int VertexSet::count() const {
	int c = 0;
	for (auto w : words_) c += std::popcount(w);
	return c;
}

bool VertexSet::empty() const {
	for (auto w : words_)
		if (w) return false;
	return true;
}

bool VertexSet::subset_of(const VertexSet& other) const {
	for (size_t i = 0; i < words_.size(); ++i)
		if (words_[i] & ~other.words_[i]) return false;
	return true;
}

bool VertexSet::intersects(const VertexSet& other) const {
	for (size_t i = 0; i < words_.size(); ++i)
		if (words_[i] & other.words_[i]) return true;
	return false;
}

VertexSet VertexSet::and_not(const VertexSet& other) const {
	VertexSet out = *this;
	for (size_t i = 0; i < words_.size(); ++i) out.words_[i] &= ~other.words_[i];
	return out;
}

VertexSet VertexSet::intersect(const VertexSet& other) const {
	VertexSet out = *this;
	for (size_t i = 0; i < words_.size(); ++i) out.words_[i] &= other.words_[i];
	return out;
}

std::vector<int> VertexSet::indices() const {
	std::vector<int> out;
	for (size_t w = 0; w < words_.size(); ++w) {
		std::uint64_t x = words_[w];
		while (x) {
			out.push_back(int(w * 64 + std::countr_zero(x)));
			x &= x - 1;
		}
	}
	return out;
}

int VertexSet::first() const {
	for (size_t w = 0; w < words_.size(); ++w)
		if (words_[w]) return int(w * 64 + std::countr_zero(words_[w]));
	return -1;
}

std::optional<int> CollinearComplex::vertex_index(const Split& s) const {
	auto it = std::lower_bound(vertices.begin(), vertices.end(), s, split_lex_less);
	if (it != vertices.end() && *it == s) return int(it - vertices.begin());
	return std::nullopt;
}

CollinearComplex build_complex(const Coloring& c) {
	if (c.n < 1 || c.d < 1) throw std::invalid_argument("build_complex: need n, d >= 1");
	CollinearComplex cx;
	cx.coloring = c;
	const int N = c.leaf_count();
	if (N > 24)
		throw resource_cap_exceeded("build_complex: " + std::to_string(N) +
		                            " leaves give about 2^" + std::to_string(N - 1) +
		                            " candidate splits");
	// all non-singleton bicolored splits, i.e. member sets over {2..N} of
	// size 2..N-2 with both colors on both sides
	for (LeafSet m = 0; m < (LeafSet{1} << (N - 1)); ++m) {
		LeafSet members = m << 2; // labels 2..N
		int k = std::popcount(members);
		if (k < 2 || k > N - 2) continue;
		Split s{N, members};
		if (is_bicolored(s, c)) cx.vertices.push_back(s);
	}
	std::sort(cx.vertices.begin(), cx.vertices.end(), split_lex_less);
	const int V = cx.vertex_count();
	if (V > 20000)
		throw resource_cap_exceeded("build_complex: " + std::to_string(V) +
		                            " vertices exceed the adjacency guard of 20000");
	cx.adjacency.assign(V, VertexSet(V));
	for (int i = 0; i < V; ++i)
		for (int j = i + 1; j < V; ++j)
			if (compatible(cx.vertices[i], cx.vertices[j])) {
				cx.adjacency[i].set(j);
				cx.adjacency[j].set(i);
			}
	return cx;
}

namespace {

void extend_cliques(const CollinearComplex& cx, std::vector<int>& clique, const VertexSet& cands,
                    int want, const std::function<void(const std::vector<int>&)>& emit) {
	if (int(clique.size()) == want) {
		emit(clique);
		return;
	}
	for (int v : cands.indices()) {
		clique.push_back(v);
		VertexSet next = cands.intersect(cx.adjacency[v]);
		// only extend upward to keep lexicographic output
		for (int u = 0; u <= v; ++u)
			if (next.test(u)) next.reset(u);
		extend_cliques(cx, clique, next, want, emit);
		clique.pop_back();
	}
}

} // namespace

std::vector<std::vector<int>> faces_of_dimension(const CollinearComplex& cx, int dim) {
	std::vector<std::vector<int>> out;
	if (dim < 0 || cx.empty()) return out;
	VertexSet all(cx.vertex_count());
	for (int i = 0; i < cx.vertex_count(); ++i) all.set(i);
	std::vector<int> clique;
	extend_cliques(cx, clique, all, dim + 1,
	               [&](const std::vector<int>& f) { out.push_back(f); });
	return out;
}

std::vector<std::int64_t> face_vector(const CollinearComplex& cx, std::int64_t max_total) {
	std::vector<std::int64_t> fvec;
	std::int64_t total = 0;
	for (int dim = 0;; ++dim) {
		std::int64_t count = 0;
		VertexSet all(cx.vertex_count());
		for (int i = 0; i < cx.vertex_count(); ++i) all.set(i);
		std::vector<int> clique;
		extend_cliques(cx, clique, all, dim + 1, [&](const std::vector<int>&) {
			++count;
			if (max_total >= 0 && total + count > max_total) {
				std::string counts;
				for (auto f : fvec) counts += std::to_string(f) + ", ";
				throw resource_cap_exceeded(
				    "face_vector: more than " + std::to_string(max_total) +
				    " faces (counted so far by dimension: " + counts +
				    std::to_string(count) + "+ in dimension " + std::to_string(dim) + ")");
			}
		});
		if (count == 0) break;
		total += count;
		fvec.push_back(count);
	}
	return fvec;
}

namespace {

// Bron-Kerbosch with pivoting.
void bron_kerbosch(const CollinearComplex& cx, VertexSet r, VertexSet p, VertexSet x,
                   std::vector<VertexSet>& out) {
	if (p.empty() && x.empty()) {
		out.push_back(r);
		return;
	}
	// pivot: vertex of p | x with most neighbors in p
	int pivot = -1, best = -1;
	for (int v : p.indices()) {
		int deg = p.intersect(cx.adjacency[v]).count();
		if (deg > best) {
			best = deg;
			pivot = v;
		}
	}
	for (int v : x.indices()) {
		int deg = p.intersect(cx.adjacency[v]).count();
		if (deg > best) {
			best = deg;
			pivot = v;
		}
	}
	VertexSet ext = pivot < 0 ? p : p.and_not(cx.adjacency[pivot]);
	for (int v : ext.indices()) {
		VertexSet r2 = r;
		r2.set(v);
		bron_kerbosch(cx, r2, p.intersect(cx.adjacency[v]), x.intersect(cx.adjacency[v]), out);
		p.reset(v);
		x.set(v);
	}
}

} // namespace

std::vector<VertexSet> maximal_faces(const CollinearComplex& cx) {
	std::vector<VertexSet> out;
	if (cx.empty()) return out;
	const int V = cx.vertex_count();
	VertexSet r(V), p(V), x(V);
	for (int i = 0; i < V; ++i) p.set(i);
	bron_kerbosch(cx, r, p, x, out);
	return out;
}

std::vector<PhyloTree> sort_facets(const Coloring& c) {
	std::vector<PhyloTree> facets = enumerate_facets(c);
	std::sort(facets.begin(), facets.end(), tree_less);
	return facets;
}

namespace {

VertexSet facet_vertex_set(const CollinearComplex& cx, const PhyloTree& t) {
	VertexSet vs(cx.vertex_count());
	for (const Split& s : t.splits) {
		auto idx = cx.vertex_index(s);
		if (!idx)
			throw std::invalid_argument("verify_shelling: facet split is not a complex vertex");
		vs.set(*idx);
	}
	return vs;
}

} // namespace

ShellingReport verify_shelling(const CollinearComplex& cx, const std::vector<PhyloTree>& order) {
	ShellingReport report;
	report.coloring = cx.coloring;
	report.order = order;

	// purity, checked per instance: every maximal face has the facet size
	std::vector<VertexSet> maximal = maximal_faces(cx);
	const int facet_size = cx.coloring.leaf_count() - 3;
	for (const VertexSet& f : maximal)
		if (f.count() != facet_size)
			throw complex_not_pure("complex has a maximal face of " + std::to_string(f.count()) +
			                       " vertices, expected " + std::to_string(facet_size));

	// the order must be a permutation of the facets
	if (order.size() != maximal.size())
		throw std::invalid_argument("verify_shelling: order lists " + std::to_string(order.size()) +
		                            " facets, complex has " + std::to_string(maximal.size()));
	std::vector<VertexSet> sets;
	sets.reserve(order.size());
	for (const PhyloTree& t : order) sets.push_back(facet_vertex_set(cx, t));
	{
		auto key = [](const VertexSet& v) { return v.indices(); };
		std::vector<std::vector<int>> a, b;
		for (const VertexSet& v : sets) a.push_back(key(v));
		for (const VertexSet& v : maximal) b.push_back(key(v));
		std::sort(a.begin(), a.end());
		std::sort(b.begin(), b.end());
		if (a != b)
			throw std::invalid_argument("verify_shelling: order is not a permutation of the facets");
	}

	const int F = int(order.size());
	// covered[i] = x in C_i with C_i minus x inside some earlier facet; the
	// witness C'' of the definition exists for (C', C_i, x) iff x is covered
	// in C_i and missing from C'
	std::vector<VertexSet> covered(F, VertexSet(cx.vertex_count()));
	for (int i = 1; i < F; ++i)
		for (int j = 0; j < i; ++j) {
			VertexSet diff = sets[i].and_not(sets[j]);
			if (diff.count() == 1) covered[i].set(diff.first());
		}

	report.restrictions.resize(F);
	for (int i = 0; i < F; ++i)
		for (int v : covered[i].indices()) report.restrictions[i].push_back(cx.vertices[v]);

	for (int i = 1; i < F; ++i) {
		for (int j = 0; j < i; ++j) {
			// need x covered in C_i and outside C_j
			if (covered[i].and_not(sets[j]).empty()) {
				report.verified = false;
				report.counterexample = ShellingCounterexample{j, i};
				return report;
			}
		}
	}
	report.verified = true;
	return report;
}

std::vector<PhyloTree> homology_facets(const ShellingReport& report) {
	if (!report.verified)
		throw std::invalid_argument("homology_facets: report is not a verified shelling");
	std::vector<PhyloTree> out;
	for (size_t i = 0; i < report.order.size(); ++i)
		if (report.restrictions[i].size() == report.order[i].splits.size())
			out.push_back(report.order[i]);
	return out;
}

} // namespace tropcol
