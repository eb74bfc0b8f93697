#include "tropcol/combs.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>

namespace tropcol {

Int stirling2(int m, int k) {
	if (m < 0 || k < 0 || k > m) throw std::invalid_argument("stirling2: need 0 <= k <= m");
	if (k == 0) return m == 0 ? 1 : 0;
	Int sum = 0;
	Int binom = 1; // C(k, 0)
	for (int i = 0; i <= k; ++i) {
		if (i > 0) binom = binom * (k - i + 1) / i;
		Int term;
		mpz_ui_pow_ui(term.get_mpz_t(), i, m);
		term *= binom;
		if ((k - i) % 2) sum -= term;
		else sum += term;
	}
	Int kfact;
	mpz_fac_ui(kfact.get_mpz_t(), k);
	Int q = sum / kfact;
	return q;
}

namespace {

Int factorial(int k) {
	Int f;
	mpz_fac_ui(f.get_mpz_t(), k);
	return f;
}

Int surjection_count(int m, int k) {
	// ordered partitions of an m-set into k nonempty parts:
	// sum_i (-1)^{k-i} C(k,i) i^m
	Int sum = 0;
	Int binom = 1;
	for (int i = 0; i <= k; ++i) {
		if (i > 0) binom = binom * (k - i + 1) / i;
		Int term;
		mpz_ui_pow_ui(term.get_mpz_t(), i, m);
		term *= binom;
		if ((k - i) % 2) sum -= term;
		else sum += term;
	}
	return sum;
}

} // namespace

Int homology_rank_formula(const Coloring& c) {
	if (c.n < 1 || c.d < 1) return 0;
	const int kmax = std::min(c.n - 1, c.d - 1);
	Int stirling_form = 0, binom_form = 0;
	for (int k = 1; k <= kmax; ++k) {
		Int kf = factorial(k);
		stirling_form += kf * kf * stirling2(c.n - 1, k) * stirling2(c.d - 1, k);
		binom_form += surjection_count(c.n - 1, k) * surjection_count(c.d - 1, k);
	}
	if (stirling_form != binom_form)
		throw std::logic_error("homology_rank_formula: the two closed forms disagree");
	return stirling_form;
}

namespace {

void extend_comb(const Coloring& c, std::vector<int>& seq, LeafSet remaining,
                 std::vector<std::vector<int>>* sink, Int* counter) {
	auto marked = [&](int x) { return x <= c.n; };
	if (remaining == 0) {
		if (!seq.empty() && marked(seq.back())) {
			if (sink) sink->push_back(seq);
			if (counter) ++*counter;
		}
		return;
	}
	LeafSet rest = remaining;
	while (rest) {
		int x = std::countr_zero(rest);
		rest &= rest - 1;
		if (seq.empty()) {
			if (marked(x)) continue; // neighbor of 1 must be unmarked
		} else {
			int a = seq.back();
			if (marked(a) == marked(x) && a > x) continue;
		}
		seq.push_back(x);
		extend_comb(c, seq, remaining & ~(LeafSet{1} << x), sink, counter);
		seq.pop_back();
	}
}

} // namespace

Int count_combs(const Coloring& c) {
	const int N = c.leaf_count();
	if (c.n < 1 || c.d < 1 || N < 4) return 0;
	LeafSet middles = full_leaf_set(N) & ~LeafSet{2} & ~(LeafSet{1} << N);
	Int count = 0;
	std::vector<int> seq;
	extend_comb(c, seq, middles, nullptr, &count);
	return count;
}

std::vector<std::vector<int>> enumerate_comb_sequences(const Coloring& c) {
	const int N = c.leaf_count();
	std::vector<std::vector<int>> out;
	if (c.n < 1 || c.d < 1 || N < 4) return out;
	LeafSet middles = full_leaf_set(N) & ~LeafSet{2} & ~(LeafSet{1} << N);
	std::vector<int> seq;
	extend_comb(c, seq, middles, &out, nullptr);
	return out;
}

PhyloTree comb_tree(const std::vector<int>& middle, const Coloring& c) {
	const int N = c.leaf_count();
	if (int(middle.size()) != N - 2)
		throw std::invalid_argument("comb_tree: middle sequence must have N-2 labels");
	std::vector<Split> splits;
	LeafSet tail = LeafSet{1} << N;
	for (int k = N - 3; k >= 1; --k) {
		tail |= LeafSet{1} << middle[k];
		splits.push_back(make_split_mask(N, tail));
	}
	return tree_from_splits(N, std::move(splits));
}

} // namespace tropcol
