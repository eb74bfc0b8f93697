#include "tropcol/splits.hpp"

#include <doctest.h>

#include <algorithm>
#include <bit>
#include <vector>

using namespace tropcol;

TEST_CASE("compatibility: disjoint, nested, crossing") {
	Split a = make_split(6, {2, 3});
	Split b = make_split(6, {4, 5});
	Split c = make_split(6, {2, 3, 4});
	Split d = make_split(6, {3, 4});
	CHECK(compatible(a, b));
	CHECK(compatible(a, c));
	CHECK_FALSE(compatible(a, d));
	CHECK(compatible(b, a)); // symmetric
	CHECK_THROWS_AS(compatible(a, make_split(5, {2, 3})), std::invalid_argument);
}

TEST_CASE("singleton splits are compatible with everything") {
	Split single = make_split(6, {4});
	for (LeafSet m = 0; m < 32; ++m) {
		LeafSet members = m << 2;
		int k = std::popcount(members);
		if (k < 1 || k > 4) continue;
		CHECK(compatible(single, make_split_mask(6, members)));
	}
}

TEST_CASE("bicolored splits") {
	// N = 8, n = 5 marked, d = 3 unmarked: both sides of {2,4,5,8} carry
	// both colors
	Coloring c{5, 3};
	CHECK(is_bicolored(make_split(8, {2, 4, 5, 8}), c));

	Coloring c33{3, 3};
	CHECK_FALSE(is_bicolored(make_split(6, {2, 3}), c33)); // all marked on one side
	CHECK_FALSE(is_bicolored(make_split(6, {4}), c33));    // singleton side
	CHECK(is_bicolored(make_split(6, {2, 4}), c33));
}

TEST_CASE("subset order examples") {
	LeafSet a = leaf_set_from_members({1, 3}, 6);
	LeafSet b = leaf_set_from_members({2, 3}, 6);
	CHECK(subset_less(a, b));
	CHECK_FALSE(subset_less(b, a));
	CHECK_FALSE(subset_less(a, a));
}

TEST_CASE("subset order is a strict total order on subsets of [6]") {
	std::vector<LeafSet> subsets;
	for (LeafSet m = 0; m < (1u << 6); ++m) subsets.push_back(m << 1);
	for (LeafSet a : subsets)
		for (LeafSet b : subsets) {
			if (a == b) {
				CHECK_FALSE(subset_less(a, b));
				continue;
			}
			CHECK(subset_less(a, b) != subset_less(b, a));
		}
	// transitivity, exhaustively
	std::sort(subsets.begin(), subsets.end(), [](LeafSet a, LeafSet b) { return subset_less(a, b); });
	for (size_t i = 0; i < subsets.size(); ++i)
		for (size_t j = i + 1; j < subsets.size(); ++j)
			CHECK(subset_less(subsets[i], subsets[j]));
}

TEST_CASE("canonical lexicographic split order") {
	Split s23 = make_split(6, {2, 3});
	Split s234 = make_split(6, {2, 3, 4});
	Split s24 = make_split(6, {2, 4});
	Split s34 = make_split(6, {3, 4});
	CHECK(split_lex_less(s23, s234));
	CHECK(split_lex_less(s234, s24));
	CHECK(split_lex_less(s24, s34));
	CHECK_FALSE(split_lex_less(s34, s23));
	CHECK_FALSE(split_lex_less(s23, s23));
}

TEST_CASE("split validation") {
	CHECK_THROWS_AS(make_split(6, {1, 2}), std::invalid_argument); // contains leaf 1
	CHECK_THROWS_AS(make_split(6, {7}), std::invalid_argument);    // out of range
	CHECK_THROWS_AS(make_split(6, {}), std::invalid_argument);     // empty part
	CHECK(make_split(6, {2, 3}).is_non_singleton());
	CHECK(make_split(6, {4}).is_singleton());
	CHECK(make_split(6, {2, 3, 4, 5, 6}).is_singleton()); // the other part is {1}
}
