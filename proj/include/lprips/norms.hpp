#pragma once

#include <algorithm>
#include <cmath>
#include <vector>

#include "lprips/errors.hpp"
#include "lprips/metric.hpp"

namespace lprips {

// which norm on distance matrices: exponent p in [1, inf], optionally
// minimized over reorderings of the points (symmetric), optionally closing
// the subsequence back to its start (cyclic, with the 2^(-1/p) scale)
struct NormDescriptor {
  double p = infty;
  bool symmetric = false;
  bool cyclic = false;
};

inline NormDescriptor lp_norm(double p) { return {p, false, false}; }
inline NormDescriptor lp_sym(double p) { return {p, true, false}; }
inline NormDescriptor lp_cyclic(double p) { return {p, false, true}; }
inline NormDescriptor lp_cyclic_sym(double p) { return {p, true, true}; }

// orders above this make the reordering search refuse to run
inline constexpr int kSymOrderCap = 8;

namespace detail {

// all accumulation happens on p-th powers (sum for finite p, max for p=inf)
// with a single root at the end, so intermediate values stay comparable and
// the dynamic program matches a left-to-right oracle bit for bit
struct PowerOps {
  double p = infty;
  bool infinite = true;

  static PowerOps make(double p) {
    PowerOps o;
    o.infinite = (p == infty);
    o.p = p;
    return o;
  }
  double fwd(double d) const {
    if (infinite || p == 1.0) return d;
    if (p == 2.0) return d * d;
    return std::pow(d, p);
  }
  double combine(double a, double b) const { return infinite ? std::max(a, b) : a + b; }
  double root(double s) const {
    if (infinite || p == 1.0) return s;
    if (p == 2.0) return std::sqrt(s);
    return std::pow(s, 1.0 / p);
  }
};

inline double cyclic_scale(double p) { return p == infty ? 1.0 : std::exp2(-1.0 / p); }

// max over strictly increasing index subsequences (at least one step) of the
// accumulated consecutive entries; best[j] is the best subsequence ending at j
template <class Dist>
double path_power(int order, Dist&& d, const PowerOps& ops) {
  if (order < 2) return 0.0;
  double stack_buf[24];
  std::vector<double> heap_buf;
  double* best = stack_buf;
  if (order > 24) {
    heap_buf.assign(order, 0.0);
    best = heap_buf.data();
  }
  best[0] = 0.0;
  double out = 0.0;
  for (int j = 1; j < order; ++j) {
    double bj = 0.0;
    for (int i = 0; i < j; ++i) {
      const double c = ops.combine(best[i], ops.fwd(d(i, j)));
      if (c > bj) bj = c;
    }
    best[j] = bj;
    if (bj > out) out = bj;
  }
  return out;
}

// same, but each subsequence also pays the closing entry back to its start
template <class Dist>
double cycle_power(int order, Dist&& d, const PowerOps& ops) {
  if (order < 2) return 0.0;
  double stack_buf[24];
  std::vector<double> heap_buf;
  double* best = stack_buf;
  if (order > 24) {
    heap_buf.assign(order, 0.0);
    best = heap_buf.data();
  }
  double out = 0.0;
  for (int s = 0; s + 1 < order; ++s) {
    for (int j = s + 1; j < order; ++j) {
      double bj = ops.fwd(d(s, j));
      for (int i = s + 1; i < j; ++i) {
        const double c = ops.combine(best[i], ops.fwd(d(i, j)));
        if (c > bj) bj = c;
      }
      best[j] = bj;
      const double cyc = ops.combine(bj, ops.fwd(d(j, s)));
      if (cyc > out) out = cyc;
    }
  }
  return out;
}

// branch and bound over permutations, lexicographic order. The running
// prefix path value never decreases when a point is appended, so a prefix
// already at the incumbent is pruned; for cyclic norms the prefix path value
// still bounds the full cycle value from below.
template <class Dist>
class SymSearch {
 public:
  SymSearch(int order, Dist d, const PowerOps& ops, bool cyclic)
      : order_(order), d_(d), ops_(ops), cyclic_(cyclic),
        perm_(order), used_(order, 0), best_end_(static_cast<size_t>(order) * order) {}

  double run() {
    best_ = infty;
    descend(0, 0.0);
    return best_;
  }

 private:
  void descend(int depth, double prefix_max) {
    if (prefix_max >= best_) return;
    if (depth == order_) {
      double v = prefix_max;
      if (cyclic_) {
        auto pd = [this](int i, int j) { return d_(perm_[i], perm_[j]); };
        v = cycle_power(order_, pd, ops_);
      }
      if (v < best_) best_ = v;
      return;
    }
    double* cur = best_end_.data() + static_cast<size_t>(depth) * order_;
    if (depth > 0) {
      const double* prev = cur - order_;
      std::copy(prev, prev + depth, cur);
    }
    for (int q = 0; q < order_; ++q) {
      if (used_[q]) continue;
      double bq = 0.0;
      for (int i = 0; i < depth; ++i) {
        const double c = ops_.combine(cur[i], ops_.fwd(d_(perm_[i], q)));
        if (c > bq) bq = c;
      }
      cur[depth] = bq;
      perm_[depth] = q;
      used_[q] = 1;
      descend(depth + 1, std::max(prefix_max, bq));
      used_[q] = 0;
    }
  }

  int order_;
  Dist d_;
  PowerOps ops_;
  bool cyclic_;
  double best_ = infty;
  std::vector<int> perm_;
  std::vector<char> used_;
  std::vector<double> best_end_;
};

// power-space evaluation shared by matrices and tuples; dist is (i,j) -> entry
template <class Dist>
double norm_power(const NormDescriptor& nu, int order, Dist&& d, bool symmetric_entries) {
  const PowerOps ops = PowerOps::make(nu.p);
  if (nu.p == infty && symmetric_entries) {
    // any reordering and any closing entry sees the same set of entries, so
    // every variant collapses to the largest one
    double m = 0.0;
    for (int i = 0; i < order; ++i)
      for (int j = i + 1; j < order; ++j) m = std::max(m, std::max(d(i, j), d(j, i)));
    return m;
  }
  if (nu.symmetric) {
    if (order > kSymOrderCap)
      throw cap_error("reordering search is capped at order " + std::to_string(kSymOrderCap) +
                      ", got " + std::to_string(order));
    SymSearch<Dist&> s(order, d, ops, nu.cyclic);
    return s.run();
  }
  return nu.cyclic ? cycle_power(order, d, ops) : path_power(order, d, ops);
}

inline void check_descriptor(const NormDescriptor& nu) {
  if (std::isnan(nu.p) || nu.p < 1.0)
    throw input_error("norm exponent must satisfy p >= 1");
}

}  // namespace detail

// value of the norm on a distance matrix (construction-validated entries;
// symmetry and triangle inequality are not required here)
double norm_eval(const NormDescriptor& nu, const DistanceMatrix& D);

// norm of the all-ones matrix of order n+1; the reordering search is skipped
// because that matrix is invariant under permutations
double norm_constant(const NormDescriptor& nu, int n);

// whether a lies in the ellipse between x and y at threshold L. For
// non-cyclic p=inf this is the two-ball intersection max(d(x,a),d(a,y)) in L;
// every other descriptor evaluates the weight of the triple (x,a,y) literally.
bool ellipse_membership(const NormDescriptor& nu, const FiniteMetricSpace& X,
                        int x, int y, int a, const LeftInterval& L);

}  // namespace lprips
