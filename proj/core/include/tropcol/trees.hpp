#ifndef TROPCOL_TREES_HPP
#define TROPCOL_TREES_HPP

#include "tropcol/matrix.hpp"
#include "tropcol/splits.hpp"

#include <compare>
#include <functional>
#include <optional>
#include <stdexcept>
#include <utility>
#include <vector>

namespace tropcol {

struct incompatible_splits : std::invalid_argument {
	Split first, second;
	incompatible_splits(Split a, Split b)
	    : std::invalid_argument("incompatible splits"), first(a), second(b) {}
};

// A phylogenetic tree on [N], identified with its set of pairwise-compatible
// non-singleton splits. Singleton splits are implicit: they span the star
// tree directions that are modded out. Splits are kept in canonical
// (lexicographic members) order; lengths are parallel and strictly positive.
struct PhyloTree {
	int leaf_count = 0;
	std::vector<Split> splits;
	std::vector<Rat> lengths;

	bool is_trivalent() const { return int(splits.size()) == leaf_count - 3; }
	std::optional<int> split_index(const Split& s) const;

	friend bool operator==(const PhyloTree& a, const PhyloTree& b) {
		return a.leaf_count == b.leaf_count && a.splits == b.splits && a.lengths == b.lengths;
	}
};

// Validates pairwise compatibility (throws incompatible_splits with the first
// failing pair), positivity of lengths, and canonicalizes the order.
PhyloTree tree_from_splits(int leaf_count, std::vector<Split> splits, std::vector<Rat> lengths);

// Same combinatorial type with unit lengths.
PhyloTree tree_from_splits(int leaf_count, std::vector<Split> splits);

// Explicit adjacency reconstructed from the split set. Vertices are
// 0..vertex_count-1; vertex 0 is the one adjacent to leaf 1.
struct TreeTopology {
	int vertex_count = 0;
	std::vector<int> leaf_vertex;                 // index by label 1..N (slot 0 unused)
	std::vector<std::pair<int, int>> edges;       // internal edges only
	std::vector<int> edge_split;                  // edges[i] realizes splits[edge_split[i]]
	std::vector<int> vertex_degree;
};

TreeTopology tree_topology(const PhyloTree& t);

// Streams every unrooted trivalent leaf-labeled tree on [N] exactly once,
// with unit lengths, by inserting leaves in increasing label order into every
// edge. Count is (2N-5)!!. The output order is deterministic and stable.
void enumerate_trivalent_trees(int leaf_count, const std::function<void(const PhyloTree&)>& emit);
std::vector<PhyloTree> enumerate_trivalent_trees(int leaf_count);

// The facets of the collinear complex: trivalent trees on n+d leaves all of
// whose splits are bicolored.
void enumerate_facets(const Coloring& c, const std::function<void(const PhyloTree&)>& emit);
std::vector<PhyloTree> enumerate_facets(const Coloring& c);

// A subtree hanging below the root leaf 1: its leaf labels (excluding 1) and
// the splits strictly inside them. Equality is equality of both fields.
struct RootedSubtree {
	LeafSet ground = 0;
	std::vector<LeafSet> splits; // member masks, strict subsets of ground

	friend bool operator==(const RootedSubtree&, const RootedSubtree&) = default;
};

// Splitting a trivalent tree along leaf 1: the neighbor vertex of leaf 1
// carries exactly two other subtrees with leaf sets M0, M1; the largest
// label lands in M1.
struct LeafOneDecomposition {
	LeafSet m0 = 0, m1 = 0;
	RootedSubtree t0, t1;
};

LeafOneDecomposition decompose_at_leaf_one(const PhyloTree& t);
LeafOneDecomposition decompose_subtree(const RootedSubtree& t);

// The recursive shelling order on trivalent trees: compare M1 by
// subset_less, then T1, then T0. Total on trivalent trees with equal leaf
// sets; throws on non-trivalent input.
std::strong_ordering tree_compare(const PhyloTree& a, const PhyloTree& b);
bool tree_less(const PhyloTree& a, const PhyloTree& b);

// Pairwise distances: d_ij = total length of the splits separating i from j,
// plus the two leaf lengths when given. Entry (i-1, j-1) of an N x N matrix.
RatMatrix tree_metric(const PhyloTree& t, const std::vector<Rat>& leaf_lengths = {});

} // namespace tropcol

#endif
