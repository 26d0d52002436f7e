#include <benchmark/benchmark.h>

#include <random>

#include "spexlab/blowup.hpp"
#include "spexlab/canonical.hpp"
#include "spexlab/constructions.hpp"
#include "spexlab/enumerate.hpp"
#include "spexlab/params.hpp"
#include "spexlab/search.hpp"
#include "spexlab/spectral.hpp"
#include "spexlab/subgraph.hpp"

using namespace spexlab;

namespace {

Graph seeded_graph(int n, double density, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::bernoulli_distribution flip(density);
  Graph g(n);
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v)
      if (flip(rng)) g.add_edge(u, v);
  return g;
}

void bm_canonical_form(benchmark::State& state) {
  Graph g = seeded_graph(static_cast<int>(state.range(0)), 0.5, 99);
  for (auto _ : state) benchmark::DoNotOptimize(canonical_form(g));
}
BENCHMARK(bm_canonical_form)->Arg(8)->Arg(12)->Arg(16);

void bm_subgraph_hit(benchmark::State& state) {
  Graph host = h_graph(static_cast<int>(state.range(0)), 3, 2);
  Graph pattern = complete_graph(4);  // present in every T_3 join
  for (auto _ : state) benchmark::DoNotOptimize(contains_subgraph(host, pattern));
}
BENCHMARK(bm_subgraph_hit)->Arg(20)->Arg(40);

void bm_subgraph_miss(benchmark::State& state) {
  // Proving absence of a near-spanning blow-up is the expensive direction.
  Graph host = h_graph(static_cast<int>(state.range(0)), 6, 3);
  Graph pattern = edge_blowup(cycle_graph(5), 6);  // 30 vertices
  for (auto _ : state) benchmark::DoNotOptimize(contains_subgraph(host, pattern));
}
BENCHMARK(bm_subgraph_miss)->Arg(34)->Arg(40);

void bm_enumerate(benchmark::State& state) {
  int n = static_cast<int>(state.range(0));
  for (auto _ : state) {
    long long count = 0;
    enumerate_graphs(n, [&](const Graph&) { ++count; });
    benchmark::DoNotOptimize(count);
  }
}
BENCHMARK(bm_enumerate)->Arg(6)->Arg(7)->Arg(8);

void bm_spectral_explicit(benchmark::State& state) {
  Graph g = h_graph(static_cast<int>(state.range(0)), 3, 3);
  for (auto _ : state) benchmark::DoNotOptimize(spectral_radius(g).rho);
}
BENCHMARK(bm_spectral_explicit)->Arg(16)->Arg(32)->Arg(64);

void bm_spectral_block_model(benchmark::State& state) {
  BlockModel bm = h_model(state.range(0), 3, 3);
  for (auto _ : state) benchmark::DoNotOptimize(spectral_radius(bm).rho);
}
BENCHMARK(bm_spectral_block_model)->Arg(1'000)->Arg(1'000'000);

void bm_profile(benchmark::State& state) {
  Graph f = path_graph(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(compute_profile(f, 6).q);
}
BENCHMARK(bm_profile)->Arg(4)->Arg(6);

void bm_build_family(benchmark::State& state) {
  IsoClassSet b;
  b.insert(complete_graph(3));
  for (auto _ : state)
    benchmark::DoNotOptimize(build_H_family(state.range(0), 6, 3, 1, b).edge_count);
}
BENCHMARK(bm_build_family)->Arg(40)->Arg(64)->Arg(100000);

void bm_spex_oracle(benchmark::State& state) {
  Graph f = matching_graph(2);
  for (auto _ : state)
    benchmark::DoNotOptimize(spex_bruteforce(static_cast<int>(state.range(0)), f, 3).value);
}
BENCHMARK(bm_spex_oracle)->Arg(6)->Arg(7)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
