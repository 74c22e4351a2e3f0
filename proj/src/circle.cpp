#include "lprips/circle.hpp"

#include <algorithm>
#include <cmath>
#include <vector>

#include "lprips/errors.hpp"
#include "lprips/norms.hpp"
#include "lprips/random_spaces.hpp"

namespace lprips {

namespace {

FiniteMetricSpace space_from_positions(const std::vector<double>& pos) {
  const int n = static_cast<int>(pos.size());
  DistanceMatrix d(n);
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      double gap = std::fabs(pos[i] - pos[j]);
      double geo = std::min(gap, 1.0 - gap);
      d.set(i, j, geo);
      d.set(j, i, geo);
    }
  FiniteMetricSpace X;
  X.dist = d;
  return X;
}

// 3-point subset weight for gaps (a, b, c), a+b+c = 1 and every gap at most
// 1/2, so the pairwise geodesic distances are the gaps themselves.  Computed
// in power space; the root is taken by the caller once
double triple_weight_power(double a, double b, double c, double p) {
  const detail::PowerOps ops = detail::PowerOps::make(p);
  double pa = ops.fwd(a), pb = ops.fwd(b), pc = ops.fwd(c);
  double via1 = std::max(pc, ops.combine(pa, pb));
  double via0 = std::max(pb, ops.combine(pa, pc));
  double via2 = std::max(pa, ops.combine(pb, pc));
  return std::min({via0, via1, via2});
}

}  // namespace

FiniteMetricSpace sample_circle(int n) {
  if (n < 3) throw input_error("sample_circle: need at least 3 points");
  std::vector<double> pos(n);
  for (int i = 0; i < n; ++i) pos[i] = static_cast<double>(i) / n;
  return space_from_positions(pos);
}

FiniteMetricSpace sample_circle_random(int n, uint64_t seed) {
  if (n < 3) throw input_error("sample_circle_random: need at least 3 points");
  Rng rng(seed);
  std::vector<double> pos(n);
  for (double& x : pos) x = rng.uniform();
  std::sort(pos.begin(), pos.end());
  return space_from_positions(pos);
}

double threshold_formula(double p) {
  if (!(p >= 1.0)) throw input_error("threshold_formula: p must be at least 1");
  double q = p == infty ? 1.0 : std::exp2(1.0 / p);
  return q / (2.0 + q);
}

GridSearchResult t_grid_search(double p, int resolution, int threads) {
  if (!(p >= 1.0)) throw input_error("t_grid_search: p must be at least 1");
  if (resolution < 100) throw input_error("t_grid_search: resolution below 100 is too coarse");
  const int res = resolution;
  const int rows = res / 2 + 1;
  std::vector<double> row_min(rows, infty);
  std::vector<int> row_arg(rows, -1);

  auto scan_row = [&](int i) {
    double best = infty;
    int arg = -1;
    double a = static_cast<double>(i) / res;
    for (int j = 0; j <= res - i; ++j) {
      if (2 * j > res || 2 * (i + j) < res) continue;
      double b = static_cast<double>(j) / res;
      double c = 1.0 - a - b;
      double v = triple_weight_power(a, b, c, p);
      if (v < best) {
        best = v;
        arg = j;
      }
    }
    row_min[i] = best;
    row_arg[i] = arg;
  };

#ifdef _OPENMP
#pragma omp parallel for schedule(static) num_threads(threads > 0 ? threads : 1)
  for (int i = 0; i < rows; ++i) scan_row(i);
#else
  (void)threads;
  for (int i = 0; i < rows; ++i) scan_row(i);
#endif

  // serial reduction in row order keeps the argmin deterministic
  GridSearchResult out;
  double best = infty;
  int bi = 0;
  for (int i = 0; i < rows; ++i)
    if (row_min[i] < best) {
      best = row_min[i];
      bi = i;
    }
  const detail::PowerOps ops = detail::PowerOps::make(p);
  out.value = ops.root(best);
  out.a = static_cast<double>(bi) / res;
  out.b = static_cast<double>(row_arg[bi]) / res;
  return out;
}

CircleReport circle_experiment(double p, int n, int max_dim, int threads, uint64_t seed,
                               bool random_points) {
  if (max_dim < 2)
    throw input_error("circle_experiment: max_dim must be at least 2 to see degree-1 deaths");
  CircleReport rep;
  rep.p = p;
  rep.n = n;
  rep.formula = threshold_formula(p);
  rep.tolerance = 2.0 * (p == infty ? 1.0 : std::exp2(1.0 / p)) / n;

  FiniteMetricSpace X = random_points ? sample_circle_random(n, seed) : sample_circle(n);
  NormDescriptor nu;
  nu.p = p;
  nu.symmetric = true;
  Barcode bars = persistence(build_vr_filtration(X, nu, max_dim, threads));

  const Bar* dominant = nullptr;
  for (const auto& bar : bars.bars) {
    if (bar.dim != 1) continue;
    if (!dominant || bar.length() > dominant->length() ||
        (bar.length() == dominant->length() && bar.birth < dominant->birth))
      dominant = &bar;
  }
  if (!dominant) return rep;
  rep.found = true;
  rep.birth = dominant->birth;
  rep.death = dominant->death;
  rep.deviation = std::fabs(rep.death - rep.formula);
  rep.pass = rep.deviation <= rep.tolerance;
  return rep;
}

}  // namespace lprips
