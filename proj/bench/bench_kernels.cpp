#include <benchmark/benchmark.h>

#include <vector>

#include "lprips/circle.hpp"
#include "lprips/kernels.hpp"
#include "lprips/random_spaces.hpp"

namespace {

using namespace lprips;

struct Workload {
  FiniteMetricSpace X;
  std::vector<std::vector<int>> tuples;
  std::vector<std::vector<int>> subsets;
};

const Workload& workload() {
  static Workload w = [] {
    Workload out;
    Rng rng(7);
    out.X = random_euclidean_space(rng, 40, 3);
    for (int i = 0; i < 20000; ++i) out.tuples.push_back(random_tuple(rng, 40, 5, true));
    for (int i = 0; i < 20000; ++i) {
      std::vector<int> s;
      while (s.size() < 4) {
        int v = rng.uniform_int(40);
        bool seen = false;
        for (int q : s) seen = seen || q == v;
        if (!seen) s.push_back(v);
      }
      std::sort(s.begin(), s.end());
      out.subsets.push_back(s);
    }
    return out;
  }();
  return w;
}

void bm_tuple_serial(benchmark::State& state) {
  const Workload& w = workload();
  for (auto _ : state)
    benchmark::DoNotOptimize(tuple_weights_serial(lp_norm(2), w.X, w.tuples));
}
BENCHMARK(bm_tuple_serial);

void bm_tuple_parallel(benchmark::State& state) {
  const Workload& w = workload();
  int threads = static_cast<int>(state.range(0));
  for (auto _ : state)
    benchmark::DoNotOptimize(tuple_weights_parallel(lp_norm(2), w.X, w.tuples, threads));
}
BENCHMARK(bm_tuple_parallel)->Arg(1)->Arg(2)->Arg(4);

void bm_subset_serial(benchmark::State& state) {
  const Workload& w = workload();
  for (auto _ : state)
    benchmark::DoNotOptimize(subset_weights_serial(lp_sym(2), w.X, w.subsets));
}
BENCHMARK(bm_subset_serial);

void bm_subset_parallel(benchmark::State& state) {
  const Workload& w = workload();
  int threads = static_cast<int>(state.range(0));
  for (auto _ : state)
    benchmark::DoNotOptimize(subset_weights_parallel(lp_sym(2), w.X, w.subsets, threads));
}
BENCHMARK(bm_subset_parallel)->Arg(1)->Arg(2)->Arg(4);

void bm_grid(benchmark::State& state) {
  int threads = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(t_grid_search(2.0, 2000, threads));
}
BENCHMARK(bm_grid)->Arg(1)->Arg(2)->Arg(4);

}  // namespace

BENCHMARK_MAIN();
