#include "lprips/metric.hpp"

#include <cmath>
#include <numeric>
#include <sstream>

namespace lprips {

namespace {

std::string pair_str(int i, int j) {
  std::ostringstream os;
  os << "(" << i << "," << j << ")";
  return os.str();
}

}  // namespace

DistanceMatrix::DistanceMatrix(int order) {
  if (order < 0) throw input_error("distance matrix order must be nonnegative");
  n_ = order;
  a_.assign(static_cast<size_t>(order) * order, 0.0);
}

DistanceMatrix DistanceMatrix::from_rows(const std::vector<std::vector<double>>& rows) {
  const int n = static_cast<int>(rows.size());
  if (n == 0) throw input_error("distance matrix is empty");
  DistanceMatrix m(n);
  for (int i = 0; i < n; ++i) {
    if (static_cast<int>(rows[i].size()) != n) {
      std::ostringstream os;
      os << "distance matrix is not square: row " << i << " has " << rows[i].size()
         << " entries, expected " << n;
      throw input_error(os.str());
    }
    for (int j = 0; j < n; ++j) {
      double v = rows[i][j];
      if (!std::isfinite(v))
        throw input_error("distance matrix entry " + pair_str(i, j) + " is not finite");
      if (i == j) {
        if (std::fabs(v) > 1e-12)
          throw input_error("distance matrix has nonzero diagonal at index " + std::to_string(i));
        v = 0.0;
      } else if (v < 0.0) {
        throw input_error("distance matrix entry " + pair_str(i, j) + " is negative");
      }
      m.set(i, j, v);
    }
  }
  return m;
}

double DistanceMatrix::max_entry() const {
  double out = 0.0;
  for (double v : a_)
    if (v > out) out = v;
  return out;
}

bool DistanceMatrix::is_symmetric(double eps) const {
  for (int i = 0; i < n_; ++i)
    for (int j = i + 1; j < n_; ++j)
      if (std::fabs((*this)(i, j) - (*this)(j, i)) > eps) return false;
  return true;
}

DistanceMatrix restrict_matrix(const DistanceMatrix& m, const std::vector<int>& indices) {
  const int k = static_cast<int>(indices.size());
  if (k == 0) throw input_error("restriction needs at least one index");
  for (int t = 0; t < k; ++t) {
    if (indices[t] < 0 || indices[t] >= m.order())
      throw input_error("restriction index " + std::to_string(indices[t]) + " out of range");
    if (t > 0 && indices[t] < indices[t - 1])
      throw input_error("restriction indices must be monotone nondecreasing");
  }
  DistanceMatrix out(k);
  for (int i = 0; i < k; ++i)
    for (int j = 0; j < k; ++j)
      out.set(i, j, m(indices[i], indices[j]));
  return out;
}

DistanceMatrix all_ones_matrix(int order) {
  if (order < 1) throw input_error("all-ones matrix needs positive order");
  DistanceMatrix m(order);
  for (int i = 0; i < order; ++i)
    for (int j = 0; j < order; ++j)
      if (i != j) m.set(i, j, 1.0);
  return m;
}

FiniteMetricSpace validate_metric(const DistanceMatrix& m, bool pseudo,
                                  std::vector<std::string> labels, double eps) {
  const int n = m.order();
  if (n == 0) throw input_error("metric space must have at least one point");
  if (labels.empty()) {
    labels.reserve(n);
    for (int i = 0; i < n; ++i) labels.push_back(std::to_string(i));
  }
  if (static_cast<int>(labels.size()) != n)
    throw input_error("label count does not match matrix order");

  DistanceMatrix d = m;
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      if (std::fabs(d(i, j) - d(j, i)) > eps) {
        std::ostringstream os;
        os << "matrix is not symmetric at " << pair_str(i, j) << ": " << d(i, j)
           << " vs " << d(j, i);
        throw input_error(os.str());
      }
      d.set(j, i, d(i, j));
      if (!pseudo && d(i, j) == 0.0) {
        std::ostringstream os;
        os << "distinct points " << labels[i] << " and " << labels[j]
           << " are at distance zero; pass the pseudometric flag to allow this";
        throw input_error(os.str());
      }
    }
  }
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      if (j == i) continue;
      for (int k = 0; k < n; ++k) {
        if (k == i || k == j) continue;
        if (d(i, j) > d(i, k) + d(k, j) + eps) {
          std::ostringstream os;
          os << "triangle inequality fails: d(" << i << "," << j << ")=" << d(i, j)
             << " > d(" << i << "," << k << ")+d(" << k << "," << j << ")="
             << d(i, k) + d(k, j);
          throw input_error(os.str());
        }
      }
    }
  }
  return FiniteMetricSpace{std::move(labels), std::move(d), pseudo};
}

FiniteMetricSpace subspace(const FiniteMetricSpace& X, const std::vector<int>& points) {
  if (points.empty()) throw input_error("subspace needs at least one point");
  std::vector<int> sorted = points;
  for (size_t t = 0; t < sorted.size(); ++t) {
    if (sorted[t] < 0 || sorted[t] >= X.size())
      throw input_error("subspace index out of range");
    if (t > 0 && sorted[t] <= sorted[t - 1])
      throw input_error("subspace indices must be strictly increasing");
  }
  std::vector<std::string> labels;
  labels.reserve(sorted.size());
  for (int i : sorted) labels.push_back(X.labels[i]);
  return FiniteMetricSpace{std::move(labels), restrict_matrix(X.dist, sorted), X.pseudo};
}

KolmogorovResult kolmogorov_quotient(const FiniteMetricSpace& X) {
  const int n = X.size();
  std::vector<int> parent(n);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&parent](int i) {
    while (parent[i] != i) {
      parent[i] = parent[parent[i]];
      i = parent[i];
    }
    return i;
  };
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if (X.d(i, j) == 0.0) {
        int a = find(i), b = find(j);
        if (a > b) std::swap(a, b);
        parent[b] = a;
      }

  std::vector<int> reps;
  std::vector<int> proj(n, -1);
  for (int i = 0; i < n; ++i) {
    int r = find(i);
    if (proj[r] < 0) {
      proj[r] = static_cast<int>(reps.size());
      reps.push_back(r);
    }
    proj[i] = proj[r];
  }

  const int k = static_cast<int>(reps.size());
  DistanceMatrix d(k);
  std::vector<std::string> labels;
  labels.reserve(k);
  for (int a = 0; a < k; ++a) {
    labels.push_back(X.labels[reps[a]]);
    for (int b = 0; b < k; ++b) d.set(a, b, X.d(reps[a], reps[b]));
  }
  KolmogorovResult out;
  out.space = validate_metric(d, false, std::move(labels));
  out.projection = std::move(proj);
  return out;
}

}  // namespace lprips
