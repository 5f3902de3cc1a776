#include <benchmark/benchmark.h>

#include <random>

#include "cladder/cpd.hpp"
#include "cladder/decompose_finite.hpp"
#include "cladder/filtrations.hpp"
#include "cladder/stability.hpp"

using namespace cladder;

namespace {

GridRep random_module(int n, int summands, uint64_t seed) {
  std::mt19937_64 rng(seed);
  auto pool = enumerate_intervals(n, 2);
  std::uniform_int_distribution<size_t> pick(0, pool.size() - 1);
  std::vector<GridRep> parts;
  for (int i = 0; i < summands; ++i) parts.push_back(interval_module(pool[pick(rng)], n, 2, 2));
  return direct_sum(parts);
}

void BM_EnumerateIntervals(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(enumerate_intervals(n, 2));
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_EnumerateIntervals)->RangeMultiplier(2)->Range(4, 32)->Complexity();

void BM_GeneralizedRank(benchmark::State& state) {
  std::mt19937_64 rng(5);
  std::uniform_int_distribution<uint32_t> bit(0, 1);
  const int n = 10, d = static_cast<int>(state.range(0));
  std::string tau = "fbfbfbfbf";
  std::vector<int> dims(n, d);
  std::vector<Matrix> maps;
  for (int i = 0; i < n - 1; ++i) {
    Matrix m(d, d, 2);
    for (int r = 0; r < d; ++r)
      for (int c = 0; c < d; ++c) m.set(r, c, bit(rng));
    maps.push_back(std::move(m));
  }
  ZigzagRep z(tau, dims, maps, 2);
  for (auto _ : state) benchmark::DoNotOptimize(generalized_rank(z, 1, n));
}
BENCHMARK(BM_GeneralizedRank)->Arg(4)->Arg(16)->Arg(64);

void BM_IntervalApproximation(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  GridRep m = random_module(n, 6, 7);
  IntervalPoset poset(n, 2);
  for (auto _ : state) benchmark::DoNotOptimize(interval_approximation(m, poset));
}
BENCHMARK(BM_IntervalApproximation)->Arg(4)->Arg(8)->Arg(12);

void BM_BottleneckDistance(benchmark::State& state) {
  GridRep a = random_module(10, 8, 11), b = random_module(10, 8, 13);
  ConnectedPD ca = connected_pd(a), cb = connected_pd(b);
  for (auto _ : state) benchmark::DoNotOptimize(bottleneck_distance(ca, cb));
}
BENCHMARK(BM_BottleneckDistance);

void BM_CliquePipeline(benchmark::State& state) {
  for (auto _ : state) {
    LadderTriplet t = clique_model(8, 17, 2);
    auto vals = critical_values(t, 1, 2);
    size_t n = std::min<size_t>(vals.size(), 6);
    std::vector<double> thresholds(vals.begin(), vals.begin() + n);
    GridRep m = homology_rep(ladder_filtration(t, thresholds), 1, 2);
    benchmark::DoNotOptimize(connected_pd(m));
  }
}
BENCHMARK(BM_CliquePipeline);

void BM_Cl3Decompose(benchmark::State& state) {
  IndecomposableSet set = builtin_indecomposables(3);
  CoefficientMatrix coeff = build_coefficient_matrix(set, enumerate_azc_bfs(3, 2, 4));
  GridRep target = random_module(3, 10, 19);
  for (auto _ : state) benchmark::DoNotOptimize(decompose(target, set, coeff));
}
BENCHMARK(BM_Cl3Decompose);

}  // namespace

BENCHMARK_MAIN();
