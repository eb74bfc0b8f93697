#include "tropcol/splits.hpp"

#include <bit>
#include <stdexcept>

namespace tropcol {

std::vector<int> leaf_set_members(LeafSet set) {
	std::vector<int> out;
	while (set) {
		int l = std::countr_zero(set);
		out.push_back(l);
		set &= set - 1;
	}
	return out;
}

LeafSet leaf_set_from_members(const std::vector<int>& members, int leaf_count) {
	LeafSet m = 0;
	for (int l : members) {
		if (l < 1 || l > leaf_count)
			throw std::invalid_argument("leaf label " + std::to_string(l) + " out of range 1.." +
			                            std::to_string(leaf_count));
		m |= LeafSet{1} << l;
	}
	return m;
}

int Split::size() const {
	return std::popcount(members);
}

bool Split::is_singleton() const {
	int k = size();
	return k == 1 || k == leaf_count - 1;
}

bool Split::is_non_singleton() const {
	int k = size();
	return 2 <= k && k <= leaf_count - 2;
}

std::vector<int> Split::member_labels() const {
	return leaf_set_members(members);
}

Split make_split_mask(int leaf_count, LeafSet members) {
	if (leaf_count < 2 || leaf_count > kMaxLeaves)
		throw std::invalid_argument("leaf count must be in 2.." + std::to_string(kMaxLeaves));
	if (members & 2)
		throw std::invalid_argument("split members must not contain leaf 1");
	if (members & ~full_leaf_set(leaf_count))
		throw std::invalid_argument("split members outside leaf range");
	int k = std::popcount(members);
	if (k < 1 || k > leaf_count - 1)
		throw std::invalid_argument("split parts must both be nonempty");
	return Split{leaf_count, members};
}

Split make_split(int leaf_count, const std::vector<int>& members) {
	return make_split_mask(leaf_count, leaf_set_from_members(members, leaf_count));
}

bool split_lex_less(const Split& a, const Split& b) {
	LeafSet diff = a.members ^ b.members;
	if (diff == 0) return false;
	int low = std::countr_zero(diff);
	if (leaf_in(a.members, low)) {
		// a's next member is smaller, unless b has run out above the prefix
		return (b.members >> low) != 0;
	}
	return (a.members >> low) == 0;
}

bool compatible(const Split& a, const Split& b) {
	if (a.leaf_count != b.leaf_count)
		throw std::invalid_argument("compatible(): splits live on different leaf sets");
	LeafSet i = a.members & b.members;
	return i == 0 || i == a.members || i == b.members;
}

bool is_bicolored(const Split& s, const Coloring& c) {
	if (s.leaf_count != c.leaf_count())
		throw std::invalid_argument("is_bicolored(): leaf count mismatch");
	LeafSet marked = c.marked_mask();
	LeafSet unmarked = c.unmarked_mask();
	LeafSet other = full_leaf_set(s.leaf_count) & ~s.members;
	return (s.members & marked) && (s.members & unmarked) && (other & marked) && (other & unmarked);
}

bool subset_less(LeafSet a, LeafSet b) {
	LeafSet diff = a ^ b;
	if (diff == 0) return false;
	int high = std::bit_width(diff) - 1;
	return leaf_in(b, high);
}

} // namespace tropcol
