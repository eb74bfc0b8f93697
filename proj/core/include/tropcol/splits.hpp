#ifndef TROPCOL_SPLITS_HPP
#define TROPCOL_SPLITS_HPP

#include <cstdint>
#include <vector>

namespace tropcol {

// Leaf subsets of [N] are bitmasks: bit l (1 <= l <= N) set iff label l is in
// the set. Bit 0 is never used. N is capped at 63.
using LeafSet = std::uint64_t;

constexpr int kMaxLeaves = 63;

inline LeafSet full_leaf_set(int leaf_count) {
	return ((LeafSet{1} << leaf_count) - 1) << 1;
}

inline bool leaf_in(LeafSet set, int label) {
	return (set >> label) & 1;
}

std::vector<int> leaf_set_members(LeafSet set);
LeafSet leaf_set_from_members(const std::vector<int>& members, int leaf_count);

// A split of [N] into two nonempty parts, stored as the edge label: the part
// that does not contain leaf 1.
struct Split {
	int leaf_count = 0;  // N
	LeafSet members = 0; // 1 <= popcount <= N-1, never contains leaf 1

	int size() const;
	bool is_singleton() const;   // one of the two parts has a single leaf
	bool is_non_singleton() const;
	std::vector<int> member_labels() const;

	friend bool operator==(const Split&, const Split&) = default;
};

// Validates and builds a split from its member list (labels in 2..N).
Split make_split(int leaf_count, const std::vector<int>& members);
Split make_split_mask(int leaf_count, LeafSet members);

// Lexicographic order on sorted member lists; the canonical vertex order of
// the collinear complex.
bool split_lex_less(const Split& a, const Split& b);

// n marked leaves (labels 1..n, contracted marked ends) followed by d
// unmarked leaves (labels n+1..n+d, the d coordinate directions).
struct Coloring {
	int n = 0; // marked
	int d = 0; // unmarked

	int leaf_count() const { return n + d; }
	LeafSet marked_mask() const { return full_leaf_set(n + d) & ((LeafSet{2} << n) - 1); }
	LeafSet unmarked_mask() const { return full_leaf_set(n + d) & ~marked_mask(); }

	friend bool operator==(const Coloring&, const Coloring&) = default;
};

// Two splits are compatible iff one of the four pairwise part intersections
// is empty; in edge-label form: nested or disjoint member sets.
bool compatible(const Split& a, const Split& b);

// Both parts contain at least one marked and one unmarked leaf.
bool is_bicolored(const Split& s, const Coloring& c);

// Subset order used by the shelling: A < B iff max of the symmetric
// difference lies in B. Irreflexive, total on distinct subsets.
bool subset_less(LeafSet a, LeafSet b);

} // namespace tropcol

#endif
