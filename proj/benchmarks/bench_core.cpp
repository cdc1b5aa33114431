#include <benchmark/benchmark.h>

#include <random>

#include "dompack/enumerate.hpp"
#include "dompack/graph6.hpp"
#include "dompack/invariants.hpp"
#include "dompack/isomorphism.hpp"
#include "dompack/verify.hpp"

static void bm_domination(benchmark::State& state) {
  std::mt19937_64 rng(12);
  dompack::Graph g = dompack::random_graph(static_cast<int>(state.range(0)), rng);
  for (auto _ : state) benchmark::DoNotOptimize(dompack::domination_number(g).value);
}
BENCHMARK(bm_domination)->Arg(10)->Arg(14)->Arg(18);

static void bm_double_domination(benchmark::State& state) {
  std::mt19937_64 rng(12);
  dompack::Graph g = dompack::random_graph(static_cast<int>(state.range(0)), rng);
  for (auto _ : state) benchmark::DoNotOptimize(dompack::double_domination_number(g).value);
}
BENCHMARK(bm_double_domination)->Arg(10)->Arg(14);

static void bm_open_packing(benchmark::State& state) {
  std::mt19937_64 rng(12);
  dompack::Graph g = dompack::random_graph(static_cast<int>(state.range(0)), rng);
  for (auto _ : state) benchmark::DoNotOptimize(dompack::open_packing_number(g).value);
}
BENCHMARK(bm_open_packing)->Arg(10)->Arg(14);

static void bm_canonical_key(benchmark::State& state) {
  std::mt19937_64 rng(34);
  dompack::Graph g = dompack::random_graph(8, rng);
  for (auto _ : state) benchmark::DoNotOptimize(dompack::canonical_key(g));
}
BENCHMARK(bm_canonical_key);

static void bm_evaluate_graph(benchmark::State& state) {
  std::mt19937_64 rng(56);
  dompack::Graph g = dompack::random_graph(7, rng);
  for (auto _ : state)
    benchmark::DoNotOptimize(dompack::evaluate_graph(g, {1, 2, 3}, {0, 1}).checks.size());
}
BENCHMARK(bm_evaluate_graph);

static void bm_graph6_round_trip(benchmark::State& state) {
  std::mt19937_64 rng(78);
  dompack::Graph g = dompack::random_graph(40, rng);
  for (auto _ : state)
    benchmark::DoNotOptimize(dompack::from_graph6(dompack::to_graph6(g)).order());
}
BENCHMARK(bm_graph6_round_trip);

static void bm_enumerate_classes(benchmark::State& state) {
  for (auto _ : state) {
    std::size_t count = 0;
    dompack::enumerate_graphs(static_cast<int>(state.range(0)), true,
                              [&](const dompack::Graph&) { ++count; });
    benchmark::DoNotOptimize(count);
  }
}
BENCHMARK(bm_enumerate_classes)->Arg(6)->Arg(7);

BENCHMARK_MAIN();
