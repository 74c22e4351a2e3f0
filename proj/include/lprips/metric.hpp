#pragma once

#include <cstddef>
#include <limits>
#include <string>
#include <utility>
#include <vector>

#include "lprips/errors.hpp"

namespace lprips {

inline constexpr double infty = std::numeric_limits<double>::infinity();

// Dense square matrix of pairwise distances. Construction enforces finite
// nonnegative entries and a zero diagonal; symmetry and the triangle
// inequality are the job of validate_metric. Treated as immutable once built.
class DistanceMatrix {
 public:
  DistanceMatrix() = default;
  explicit DistanceMatrix(int order);

  // rows must form a square array; diagonal entries within 1e-12 of zero are
  // snapped to exact zero, anything else on the diagonal is rejected
  static DistanceMatrix from_rows(const std::vector<std::vector<double>>& rows);

  int order() const { return n_; }
  double operator()(int i, int j) const { return a_[static_cast<size_t>(i) * n_ + j]; }
  void set(int i, int j, double v) { a_[static_cast<size_t>(i) * n_ + j] = v; }

  double max_entry() const;
  bool is_symmetric(double eps) const;

 private:
  int n_ = 0;
  std::vector<double> a_;
};

// complete distance matrix with the entries of rows/cols `indices`, which
// must be monotone nondecreasing (repeats allowed, realizing degeneracies)
DistanceMatrix restrict_matrix(const DistanceMatrix& m, const std::vector<int>& indices);

// the matrix with every off-diagonal entry equal to 1, order n
DistanceMatrix all_ones_matrix(int order);

struct FiniteMetricSpace {
  std::vector<std::string> labels;
  DistanceMatrix dist;
  bool pseudo = false;

  int size() const { return dist.order(); }
  double d(int i, int j) const { return dist(i, j); }
};

// checks symmetry and the triangle inequality to within eps, mirrors the
// upper triangle so the stored matrix is exactly symmetric, and (unless
// pseudo) rejects distinct points at distance zero; failures name witnesses
FiniteMetricSpace validate_metric(const DistanceMatrix& m, bool pseudo,
                                  std::vector<std::string> labels = {},
                                  double eps = 1e-12);

FiniteMetricSpace subspace(const FiniteMetricSpace& X, const std::vector<int>& points);

// left-infinite interval of thresholds: (-inf, r), (-inf, r] or all of R
struct LeftInterval {
  double bound = infty;
  bool strict = false;

  static LeftInterval all() { return {infty, false}; }
  static LeftInterval less_than(double r) { return {r, true}; }
  static LeftInterval at_most(double r) { return {r, false}; }

  bool unbounded() const { return bound == infty; }
  bool contains(double t) const {
    return unbounded() || (strict ? t < bound : t <= bound);
  }
  // the interval a*L + c (a > 0), used to translate thresholds along maps
  LeftInterval scaled_shifted(double a, double c) const {
    if (unbounded()) return *this;
    return {a * bound + c, strict};
  }
};

struct KolmogorovResult {
  FiniteMetricSpace space;       // one point per zero-distance class
  std::vector<int> projection;   // original index -> class index
};

// identify points at distance exactly zero; class representatives keep the
// smallest original index and classes are ordered by representative
KolmogorovResult kolmogorov_quotient(const FiniteMetricSpace& X);

}  // namespace lprips
