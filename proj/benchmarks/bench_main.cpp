#include <benchmark/benchmark.h>

#include <random>
#include <vector>

#include "mua/assignment.hpp"
#include "mua/canonical.hpp"
#include "mua/distance.hpp"
#include "mua/finite_algebra.hpp"
#include "mua/monoalg.hpp"
#include "mua/network.hpp"

namespace {

using mua::MonoAlg;

MonoAlg random_alg(std::mt19937& rng, int n) {
  std::uniform_int_distribution<int> pick(0, n - 1);
  std::vector<int> f(n);
  for (auto& x : f) x = pick(rng);
  return MonoAlg(n, f);
}

void BM_distance_figure_pair(benchmark::State& state) {
  MonoAlg a(12, {0, 0, 0, 0, 1, 1, 2, 6, 7, 3, 9, 9});
  MonoAlg b(12, {0, 0, 0, 0, 1, 1, 5, 2, 2, 2, 3, 10});
  for (auto _ : state) {
    mua::TreeDistanceCache cache;  // cold cache each round
    benchmark::DoNotOptimize(mua::distance(a, b, &cache));
  }
}
BENCHMARK(BM_distance_figure_pair);

void BM_distance_random(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  std::mt19937 rng(1234);
  std::vector<std::pair<MonoAlg, MonoAlg>> pairs;
  for (int i = 0; i < 64; ++i)
    pairs.emplace_back(random_alg(rng, n), random_alg(rng, n));
  size_t i = 0;
  for (auto _ : state) {
    mua::TreeDistanceCache cache;
    const auto& [a, b] = pairs[i++ % pairs.size()];
    benchmark::DoNotOptimize(mua::distance(a, b, &cache));
  }
}
BENCHMARK(BM_distance_random)->Arg(8)->Arg(16)->Arg(32)->Arg(64);

void BM_distance_random_warm_cache(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  std::mt19937 rng(99);
  std::vector<std::pair<MonoAlg, MonoAlg>> pairs;
  for (int i = 0; i < 64; ++i)
    pairs.emplace_back(random_alg(rng, n), random_alg(rng, n));
  mua::TreeDistanceCache cache;
  size_t i = 0;
  for (auto _ : state)
    benchmark::DoNotOptimize(
        mua::distance(pairs[i % 64].first, pairs[i++ % 64].second, &cache));
}
BENCHMARK(BM_distance_random_warm_cache)->Arg(16)->Arg(64);

void BM_canonical_code(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  std::mt19937 rng(7);
  std::vector<MonoAlg> algs;
  for (int i = 0; i < 64; ++i) algs.push_back(random_alg(rng, n));
  size_t i = 0;
  for (auto _ : state)
    benchmark::DoNotOptimize(mua::canonical_code(algs[i++ % algs.size()]));
}
BENCHMARK(BM_canonical_code)->Arg(8)->Arg(32)->Arg(128)->Arg(512);

void BM_assignment_hungarian(benchmark::State& state) {
  const int m = static_cast<int>(state.range(0));
  std::mt19937 rng(5);
  std::uniform_int_distribution<int> cost(0, 50);
  mua::CostMatrix c;
  c.cost.assign(m, std::vector<std::int64_t>(m));
  c.real_rows = m;
  for (auto& row : c.cost)
    for (auto& x : row) x = cost(rng);
  for (auto _ : state) benchmark::DoNotOptimize(mua::assignment_min(c));
}
BENCHMARK(BM_assignment_hungarian)->Arg(4)->Arg(8)->Arg(16)->Arg(32);

void BM_subalgebra_network_s4(benchmark::State& state) {
  auto s4 = mua::symmetric_group(4);
  for (auto _ : state)
    benchmark::DoNotOptimize(mua::build_subalgebra_network(s4));
}
BENCHMARK(BM_subalgebra_network_s4);

void BM_monounary_network(benchmark::State& state) {
  const int cap = static_cast<int>(state.range(0));
  for (auto _ : state)
    benchmark::DoNotOptimize(mua::build_monounary_network(cap));
}
BENCHMARK(BM_monounary_network)->Arg(6)->Arg(8)->Arg(10)->Unit(benchmark::kMillisecond);

void BM_capped_bfs(benchmark::State& state) {
  static const auto net = mua::build_monounary_network(10);
  for (auto _ : state)
    benchmark::DoNotOptimize(mua::distances_within_cap(net, 0, 10));
}
BENCHMARK(BM_capped_bfs)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
