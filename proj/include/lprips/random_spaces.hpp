#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "lprips/metric.hpp"

namespace lprips {

// deterministic uniform doubles straight from the engine's bits; the
// standard distributions are avoided because their output is not pinned
// across library implementations
struct Rng {
  std::mt19937_64 engine;

  explicit Rng(uint64_t seed) : engine(seed) {}

  double uniform() { return (engine() >> 11) * 0x1.0p-53; }
  double uniform(double a, double b) { return a + (b - a) * uniform(); }
  int uniform_int(int n) { return static_cast<int>(engine() % static_cast<uint64_t>(n)); }
};

// stable per-trial seed derivation (splitmix64 over seed then stream)
uint64_t mix_seed(uint64_t seed, uint64_t stream);

// uniform points in the unit cube with euclidean distances
FiniteMetricSpace random_euclidean_space(Rng& rng, int n, int dim);

// off-diagonal entries uniform in [1,2]; the triangle inequality holds for
// any such matrix outright
FiniteMetricSpace random_range_metric(Rng& rng, int n);

// random symmetric entries in (0,1] closed under shortest paths
FiniteMetricSpace random_graph_metric(Rng& rng, int n);

// points grouped into classes, zero distance inside a class
FiniteMetricSpace random_pseudometric(Rng& rng, int n, int classes);

// adds noise in [0, eps] to each off-diagonal pair, then restores the
// triangle inequality by shortest paths
FiniteMetricSpace perturb_space(Rng& rng, const FiniteMetricSpace& X, double eps);

std::vector<int> random_tuple(Rng& rng, int n_points, int len, bool consecutive_distinct);

}  // namespace lprips
