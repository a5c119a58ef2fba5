#include <benchmark/benchmark.h>

#include <random>

#include "lapdist/combinatorics.hpp"
#include "lapdist/graph.hpp"
#include "lapdist/interval.hpp"
#include "lapdist/roots.hpp"
#include "lapdist/spectral.hpp"
#include "lapdist/verify.hpp"

using namespace lapdist;

static void BM_charpoly(benchmark::State& state) {
  std::mt19937_64 rng(1);
  Graph g = random_graph(static_cast<int>(state.range(0)), rng);
  for (auto _ : state) {
    IntPoly cp = charpoly(g);
    benchmark::DoNotOptimize(cp);
  }
}
BENCHMARK(BM_charpoly)->Arg(8)->Arg(16)->Arg(32);

static void BM_interval_count(benchmark::State& state) {
  int k = static_cast<int>(state.range(0));
  Graph g = binary_star(BinaryStarVariant::B, k, k, k);
  Interval window = Interval::half_open(Rat(2), Rat(g.order()));
  for (auto _ : state) {
    int count = m_count(g, window);
    benchmark::DoNotOptimize(count);
  }
}
BENCHMARK(BM_interval_count)->Arg(4)->Arg(8)->Arg(12);

static void BM_root_isolation(benchmark::State& state) {
  IntPoly cp = charpoly(path(static_cast<int>(state.range(0))));
  Rat width(1, 1024);
  for (auto _ : state) {
    RootSummary roots = isolate_roots(cp, width);
    benchmark::DoNotOptimize(roots);
  }
}
BENCHMARK(BM_root_isolation)->Arg(8)->Arg(16);

static void BM_spanning_trees(benchmark::State& state) {
  Graph g = complete(static_cast<int>(state.range(0)));
  for (auto _ : state) {
    Int t = spanning_tree_count_determinant(g);
    benchmark::DoNotOptimize(t);
  }
}
BENCHMARK(BM_spanning_trees)->Arg(8)->Arg(16)->Arg(24);

static void BM_canonical_form(benchmark::State& state) {
  std::mt19937_64 rng(2);
  Graph g = random_graph(static_cast<int>(state.range(0)), rng);
  for (auto _ : state) {
    CanonicalForm form = canonical_form(g);
    benchmark::DoNotOptimize(form);
  }
}
BENCHMARK(BM_canonical_form)->Arg(8)->Arg(12)->Arg(16);

static void BM_independence_number(benchmark::State& state) {
  std::mt19937_64 rng(3);
  Graph g = random_graph(static_cast<int>(state.range(0)), rng);
  for (auto _ : state) {
    int alpha = independence_number(g);
    benchmark::DoNotOptimize(alpha);
  }
}
BENCHMARK(BM_independence_number)->Arg(16)->Arg(24)->Arg(32);

BENCHMARK_MAIN();
