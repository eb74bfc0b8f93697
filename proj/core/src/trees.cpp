#include "tropcol/trees.hpp"

#include <algorithm>
#include <bit>
#include <numeric>

namespace tropcol {

std::optional<int> PhyloTree::split_index(const Split& s) const {
	for (size_t i = 0; i < splits.size(); ++i)
		if (splits[i] == s) return int(i);
	return std::nullopt;
}

PhyloTree tree_from_splits(int leaf_count, std::vector<Split> splits, std::vector<Rat> lengths) {
	if (splits.size() != lengths.size())
		throw std::invalid_argument("tree_from_splits: splits and lengths differ in size");
	for (const Split& s : splits) {
		if (s.leaf_count != leaf_count)
			throw std::invalid_argument("tree_from_splits: split leaf count mismatch");
		if (!s.is_non_singleton())
			throw std::invalid_argument("tree_from_splits: singleton splits are implicit");
	}
	for (const Rat& l : lengths)
		if (l <= 0) throw std::invalid_argument("tree_from_splits: lengths must be positive");
	for (size_t i = 0; i < splits.size(); ++i)
		for (size_t j = i + 1; j < splits.size(); ++j) {
			if (splits[i] == splits[j])
				throw std::invalid_argument("tree_from_splits: duplicate split");
			if (!compatible(splits[i], splits[j])) throw incompatible_splits(splits[i], splits[j]);
		}

	std::vector<int> order(splits.size());
	std::iota(order.begin(), order.end(), 0);
	std::sort(order.begin(), order.end(),
	          [&](int a, int b) { return split_lex_less(splits[a], splits[b]); });
	PhyloTree t;
	t.leaf_count = leaf_count;
	t.splits.reserve(splits.size());
	t.lengths.reserve(splits.size());
	for (int i : order) {
		t.splits.push_back(splits[i]);
		t.lengths.push_back(lengths[i]);
	}
	return t;
}

PhyloTree tree_from_splits(int leaf_count, std::vector<Split> splits) {
	std::vector<Rat> unit(splits.size(), Rat(1));
	return tree_from_splits(leaf_count, std::move(splits), std::move(unit));
}

TreeTopology tree_topology(const PhyloTree& t) {
	const int N = t.leaf_count;
	// Sort splits by decreasing size; the parent of a split is the smallest
	// strict superset (laminar family), the root if none.
	std::vector<int> order(t.splits.size());
	std::iota(order.begin(), order.end(), 0);
	std::sort(order.begin(), order.end(), [&](int a, int b) {
		return t.splits[a].size() > t.splits[b].size();
	});

	TreeTopology topo;
	topo.leaf_vertex.assign(N + 1, -1);
	std::vector<int> vertex_of_split(t.splits.size(), -1);
	topo.vertex_count = 1; // vertex 0 holds leaf 1
	std::vector<int> parent_vertex(t.splits.size(), 0);

	for (size_t k = 0; k < order.size(); ++k) {
		int si = order[k];
		int parent = 0;
		int best_size = N + 1;
		for (size_t j = 0; j < k; ++j) {
			int sj = order[j];
			LeafSet inter = t.splits[si].members & t.splits[sj].members;
			if (inter == t.splits[si].members && t.splits[sj].size() < best_size) {
				best_size = t.splits[sj].size();
				parent = vertex_of_split[sj];
			}
		}
		int v = topo.vertex_count++;
		vertex_of_split[si] = v;
		parent_vertex[si] = parent;
		topo.edges.emplace_back(parent, v);
		topo.edge_split.push_back(si);
	}

	// Attach leaves to the smallest split containing them, or to vertex 0.
	topo.leaf_vertex[1] = 0;
	for (int leaf = 2; leaf <= N; ++leaf) {
		int best = -1;
		int best_size = N + 1;
		for (size_t i = 0; i < t.splits.size(); ++i)
			if (leaf_in(t.splits[i].members, leaf) && t.splits[i].size() < best_size) {
				best_size = t.splits[i].size();
				best = int(i);
			}
		topo.leaf_vertex[leaf] = best < 0 ? 0 : vertex_of_split[best];
	}

	topo.vertex_degree.assign(topo.vertex_count, 0);
	for (auto [u, v] : topo.edges) {
		++topo.vertex_degree[u];
		++topo.vertex_degree[v];
	}
	for (int leaf = 1; leaf <= N; ++leaf) ++topo.vertex_degree[topo.leaf_vertex[leaf]];
	return topo;
}

namespace {

// Enumeration works on explicit edge lists; leaves are 1..N, internal
// vertices are N+1, N+2, ...
struct EdgeTree {
	std::vector<std::pair<int, int>> edges;
};

void extract_splits(const EdgeTree& tree, int leaf_count, int vertex_limit,
                    std::vector<Split>& out) {
	out.clear();
	std::vector<std::vector<int>> adj(vertex_limit + 1);
	for (auto [u, v] : tree.edges) {
		adj[u].push_back(v);
		adj[v].push_back(u);
	}
	for (auto [u, v] : tree.edges) {
		if (u <= leaf_count || v <= leaf_count) continue; // leaf edge
		// collect the leaf set on v's side of the edge (u, v)
		LeafSet side = 0;
		std::vector<int> stack{v};
		std::vector<char> seen(vertex_limit + 1, 0);
		seen[u] = seen[v] = 1;
		while (!stack.empty()) {
			int x = stack.back();
			stack.pop_back();
			if (x <= leaf_count) side |= LeafSet{1} << x;
			for (int y : adj[x])
				if (!seen[y]) {
					seen[y] = 1;
					stack.push_back(y);
				}
		}
		if (side & 2) side = full_leaf_set(leaf_count) & ~side;
		out.push_back(Split{leaf_count, side});
	}
}

void insert_leaves(EdgeTree& tree, int next_leaf, int next_internal, int leaf_count,
                   std::vector<Split>& scratch, const std::function<void(const PhyloTree&)>& emit) {
	if (next_leaf > leaf_count) {
		extract_splits(tree, leaf_count, next_internal - 1, scratch);
		emit(tree_from_splits(leaf_count, scratch));
		return;
	}
	const size_t edge_count = tree.edges.size();
	for (size_t i = 0; i < edge_count; ++i) {
		auto [u, v] = tree.edges[i];
		int w = next_internal;
		tree.edges[i] = {u, w};
		tree.edges.push_back({w, v});
		tree.edges.push_back({w, next_leaf});
		insert_leaves(tree, next_leaf + 1, next_internal + 1, leaf_count, scratch, emit);
		tree.edges.pop_back();
		tree.edges.pop_back();
		tree.edges[i] = {u, v};
	}
}

} // namespace

void enumerate_trivalent_trees(int leaf_count, const std::function<void(const PhyloTree&)>& emit) {
	if (leaf_count < 3)
		throw std::invalid_argument("enumerate_trivalent_trees: need at least 3 leaves");
	if (leaf_count > 16)
		throw std::invalid_argument("enumerate_trivalent_trees: leaf count too large to enumerate");
	EdgeTree base;
	int hub = leaf_count + 1;
	base.edges = {{hub, 1}, {hub, 2}, {hub, 3}};
	std::vector<Split> scratch;
	insert_leaves(base, 4, leaf_count + 2, leaf_count, scratch, emit);
}

std::vector<PhyloTree> enumerate_trivalent_trees(int leaf_count) {
	std::vector<PhyloTree> out;
	enumerate_trivalent_trees(leaf_count, [&](const PhyloTree& t) { out.push_back(t); });
	return out;
}

void enumerate_facets(const Coloring& c, const std::function<void(const PhyloTree&)>& emit) {
	if (c.n < 1 || c.d < 1) throw std::invalid_argument("enumerate_facets: need n, d >= 1");
	enumerate_trivalent_trees(c.leaf_count(), [&](const PhyloTree& t) {
		for (const Split& s : t.splits)
			if (!is_bicolored(s, c)) return;
		emit(t);
	});
}

std::vector<PhyloTree> enumerate_facets(const Coloring& c) {
	std::vector<PhyloTree> out;
	enumerate_facets(c, [&](const PhyloTree& t) { out.push_back(t); });
	return out;
}

namespace {

RootedSubtree induced_subtree(const std::vector<LeafSet>& splits, LeafSet part) {
	RootedSubtree s;
	s.ground = part;
	for (LeafSet m : splits)
		if ((m & part) == m && m != part) s.splits.push_back(m);
	return s;
}

} // namespace

LeafOneDecomposition decompose_subtree(const RootedSubtree& t) {
	if (std::popcount(t.ground) < 2)
		throw std::invalid_argument("decompose_subtree: nothing to split below a single leaf");
	// Maximal splits are pairwise disjoint (laminar family); together with
	// the uncovered leaves they are the children of the root vertex. A
	// trivalent tree has exactly two children here.
	std::vector<LeafSet> parts;
	LeafSet covered = 0;
	for (LeafSet m : t.splits) {
		bool maximal = true;
		for (LeafSet other : t.splits)
			if (other != m && (m & other) == m) {
				maximal = false;
				break;
			}
		if (maximal) {
			parts.push_back(m);
			covered |= m;
		}
	}
	LeafSet rest = t.ground & ~covered;
	while (rest) {
		LeafSet bit = rest & (~rest + 1);
		parts.push_back(bit);
		rest &= rest - 1;
	}
	if (parts.size() != 2)
		throw std::invalid_argument("decompose_subtree: tree is not trivalent at the root");
	LeafOneDecomposition d;
	int high = std::bit_width(t.ground) - 1;
	LeafSet p0 = parts[0], p1 = parts[1];
	if (leaf_in(p0, high)) std::swap(p0, p1);
	d.m0 = p0;
	d.m1 = p1;
	d.t0 = induced_subtree(t.splits, p0);
	d.t1 = induced_subtree(t.splits, p1);
	return d;
}

LeafOneDecomposition decompose_at_leaf_one(const PhyloTree& t) {
	if (!t.is_trivalent())
		throw std::invalid_argument("decompose_at_leaf_one: tree must be trivalent");
	RootedSubtree root;
	root.ground = full_leaf_set(t.leaf_count) & ~LeafSet{2};
	root.splits.reserve(t.splits.size());
	for (const Split& s : t.splits) root.splits.push_back(s.members);
	return decompose_subtree(root);
}

namespace {

std::strong_ordering subtree_compare(const RootedSubtree& a, const RootedSubtree& b) {
	if (a == b) return std::strong_ordering::equal;
	// grounds are equal along the recursion; a difference is a split set
	// difference somewhere below
	LeafOneDecomposition da = decompose_subtree(a);
	LeafOneDecomposition db = decompose_subtree(b);
	if (da.m1 != db.m1)
		return subset_less(da.m1, db.m1) ? std::strong_ordering::less : std::strong_ordering::greater;
	if (auto c = subtree_compare(da.t1, db.t1); c != 0) return c;
	return subtree_compare(da.t0, db.t0);
}

} // namespace

std::strong_ordering tree_compare(const PhyloTree& a, const PhyloTree& b) {
	if (a.leaf_count != b.leaf_count)
		throw std::invalid_argument("tree_compare: leaf count mismatch");
	if (!a.is_trivalent() || !b.is_trivalent())
		throw std::invalid_argument("tree_compare: order is defined on trivalent trees");
	RootedSubtree ra, rb;
	ra.ground = rb.ground = full_leaf_set(a.leaf_count) & ~LeafSet{2};
	for (const Split& s : a.splits) ra.splits.push_back(s.members);
	for (const Split& s : b.splits) rb.splits.push_back(s.members);
	return subtree_compare(ra, rb);
}

bool tree_less(const PhyloTree& a, const PhyloTree& b) {
	return tree_compare(a, b) == std::strong_ordering::less;
}

RatMatrix tree_metric(const PhyloTree& t, const std::vector<Rat>& leaf_lengths) {
	const int N = t.leaf_count;
	if (!leaf_lengths.empty() && int(leaf_lengths.size()) != N)
		throw std::invalid_argument("tree_metric: need one leaf length per leaf");
	RatMatrix d(N, N);
	for (int i = 1; i <= N; ++i)
		for (int j = i + 1; j <= N; ++j) {
			Rat sum = 0;
			for (size_t k = 0; k < t.splits.size(); ++k) {
				bool ii = leaf_in(t.splits[k].members, i);
				bool jj = leaf_in(t.splits[k].members, j);
				if (ii != jj) sum += t.lengths[k];
			}
			if (!leaf_lengths.empty()) sum += leaf_lengths[i - 1] + leaf_lengths[j - 1];
			d.at(i - 1, j - 1) = sum;
			d.at(j - 1, i - 1) = d.at(i - 1, j - 1);
		}
	return d;
}

} // namespace tropcol
