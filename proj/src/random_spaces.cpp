#include "lprips/random_spaces.hpp"

#include <cmath>

namespace lprips {

namespace {

void shortest_path_closure(DistanceMatrix& d) {
  const int n = d.order();
  for (int k = 0; k < n; ++k)
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) {
        const double via = d(i, k) + d(k, j);
        if (via < d(i, j)) d.set(i, j, via);
      }
}

}  // namespace

uint64_t mix_seed(uint64_t seed, uint64_t stream) {
  uint64_t z = seed + 0x9e3779b97f4a7c15ULL * (stream + 1);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

FiniteMetricSpace random_euclidean_space(Rng& rng, int n, int dim) {
  std::vector<std::vector<double>> pts(n, std::vector<double>(dim));
  for (auto& p : pts)
    for (double& c : p) c = rng.uniform();
  DistanceMatrix d(n);
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      double s = 0.0;
      for (int c = 0; c < dim; ++c) {
        const double t = pts[i][c] - pts[j][c];
        s += t * t;
      }
      const double v = std::sqrt(s);
      d.set(i, j, v);
      d.set(j, i, v);
    }
  return validate_metric(d, false);
}

FiniteMetricSpace random_range_metric(Rng& rng, int n) {
  DistanceMatrix d(n);
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      const double v = rng.uniform(1.0, 2.0);
      d.set(i, j, v);
      d.set(j, i, v);
    }
  return validate_metric(d, false);
}

FiniteMetricSpace random_graph_metric(Rng& rng, int n) {
  DistanceMatrix d(n);
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      const double v = 0.05 + 0.95 * rng.uniform();
      d.set(i, j, v);
      d.set(j, i, v);
    }
  shortest_path_closure(d);
  return validate_metric(d, false);
}

FiniteMetricSpace random_pseudometric(Rng& rng, int n, int classes) {
  if (classes < 1 || classes > n) throw input_error("class count must be in [1, n]");
  FiniteMetricSpace base = random_range_metric(rng, classes);
  std::vector<int> cls(n);
  for (int i = 0; i < classes; ++i) cls[i] = i;  // every class inhabited
  for (int i = classes; i < n; ++i) cls[i] = rng.uniform_int(classes);
  DistanceMatrix d(n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (i != j && cls[i] != cls[j]) d.set(i, j, base.d(cls[i], cls[j]));
  return validate_metric(d, true);
}

FiniteMetricSpace perturb_space(Rng& rng, const FiniteMetricSpace& X, double eps) {
  const int n = X.size();
  DistanceMatrix d(n);
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      const double v = X.d(i, j) + eps * rng.uniform();
      d.set(i, j, v);
      d.set(j, i, v);
    }
  shortest_path_closure(d);
  return validate_metric(d, X.pseudo);
}

std::vector<int> random_tuple(Rng& rng, int n_points, int len, bool consecutive_distinct) {
  if (len < 1) throw input_error("tuple length must be positive");
  if (consecutive_distinct && n_points < 2 && len > 1)
    throw input_error("consecutive-distinct tuples need at least two points");
  std::vector<int> t(len);
  t[0] = rng.uniform_int(n_points);
  for (int k = 1; k < len; ++k) {
    int v = rng.uniform_int(n_points);
    while (consecutive_distinct && v == t[k - 1]) v = rng.uniform_int(n_points);
    t[k] = v;
  }
  return t;
}

}  // namespace lprips
