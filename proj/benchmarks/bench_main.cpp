#include "tropcol/combs.hpp"
#include "tropcol/complex.hpp"
#include "tropcol/evaluation.hpp"
#include "tropcol/homology.hpp"

#include <benchmark/benchmark.h>

#include <random>

using namespace tropcol;

namespace {

RatMatrix random_matrix(int r, int c, std::mt19937_64& rng) {
	RatMatrix m(r, c);
	for (int i = 0; i < r; ++i)
		for (int j = 0; j < c; ++j) {
			Rat q(int(rng() % 21) - 10, int(rng() % 8) + 1);
			q.canonicalize();
			m.at(i, j) = q;
		}
	return m;
}

void BM_TropicalRank6x6(benchmark::State& state) {
	std::mt19937_64 rng(1);
	RatMatrix m = random_matrix(6, 6, rng);
	for (auto _ : state) benchmark::DoNotOptimize(tropical_rank_le2(m).collinear);
}
BENCHMARK(BM_TropicalRank6x6);

void BM_EnumerateTrees(benchmark::State& state) {
	const int N = int(state.range(0));
	for (auto _ : state) {
		long long count = 0;
		enumerate_trivalent_trees(N, [&](const PhyloTree&) { ++count; });
		benchmark::DoNotOptimize(count);
	}
}
BENCHMARK(BM_EnumerateTrees)->Arg(6)->Arg(7)->Arg(8);

void BM_SortFacets(benchmark::State& state) {
	Coloring c{int(state.range(0)), int(state.range(1))};
	for (auto _ : state) benchmark::DoNotOptimize(sort_facets(c).size());
}
BENCHMARK(BM_SortFacets)->Args({3, 3})->Args({3, 4})->Args({4, 4});

void BM_VerifyShelling(benchmark::State& state) {
	Coloring c{int(state.range(0)), int(state.range(1))};
	CollinearComplex cx = build_complex(c);
	std::vector<PhyloTree> order = sort_facets(c);
	for (auto _ : state) benchmark::DoNotOptimize(verify_shelling(cx, order).verified);
}
BENCHMARK(BM_VerifyShelling)->Args({3, 3})->Args({3, 4})->Args({4, 4});

void BM_BettiOverQ(benchmark::State& state) {
	Coloring c{int(state.range(0)), int(state.range(1))};
	CollinearComplex cx = build_complex(c);
	for (auto _ : state) benchmark::DoNotOptimize(betti_numbers(cx).reduced_betti.back());
}
BENCHMARK(BM_BettiOverQ)->Args({3, 3})->Args({3, 4})->Args({4, 4});

void BM_RankFormula(benchmark::State& state) {
	Coloring c{int(state.range(0)), int(state.range(0))};
	for (auto _ : state) benchmark::DoNotOptimize(homology_rank_formula(c).get_si());
}
BENCHMARK(BM_RankFormula)->Arg(8)->Arg(12);

void BM_CanonicalTree(benchmark::State& state) {
	Coloring c{3, 4};
	std::mt19937_64 rng(2);
	std::vector<PhyloTree> facets = enumerate_facets(c);
	std::vector<PointConfig> configs;
	for (int i = 0; i < 64; ++i) {
		PhyloTree t = facets[rng() % facets.size()];
		for (auto& l : t.lengths) {
			l = Rat(int(rng() % 20) + 1, int(rng() % 10) + 1);
			l.canonicalize();
		}
		configs.push_back(ev_points(MarkedLine{c, t, ProjectivePoint{std::vector<Rat>(4, Rat(0))}}));
	}
	size_t i = 0;
	for (auto _ : state) {
		benchmark::DoNotOptimize(canonical_tree(configs[i % configs.size()], 4).tree.splits.size());
		++i;
	}
}
BENCHMARK(BM_CanonicalTree);

} // namespace

BENCHMARK_MAIN();
