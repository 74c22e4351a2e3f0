#include "lprips/weights.hpp"

#include <bit>
#include <cstdint>

namespace lprips {

namespace {

void check_tuple(const FiniteMetricSpace& X, const std::vector<int>& t) {
  if (t.empty()) throw input_error("tuple must have at least one entry");
  for (int idx : t)
    if (idx < 0 || idx >= X.size())
      throw input_error("tuple index " + std::to_string(idx) + " out of range");
}

}  // namespace

double tuple_weight(const NormDescriptor& nu, const FiniteMetricSpace& X,
                    const std::vector<int>& t) {
  detail::check_descriptor(nu);
  check_tuple(X, t);
  const int len = static_cast<int>(t.size());
  auto acc = [&X, &t](int i, int j) { return X.d(t[i], t[j]); };
  const double power = detail::norm_power(nu, len, acc, true);
  double value = detail::PowerOps::make(nu.p).root(power);
  if (nu.cyclic) value *= detail::cyclic_scale(nu.p);
  return value;
}

double tuple_weight_oracle(const NormDescriptor& nu, const FiniteMetricSpace& X,
                           const std::vector<int>& t) {
  detail::check_descriptor(nu);
  check_tuple(X, t);
  if (nu.symmetric)
    throw input_error("the subsequence oracle covers fixed-order norms only");
  const int len = static_cast<int>(t.size());
  if (len > 20)
    throw cap_error("subsequence oracle is capped at 20 entries, got " + std::to_string(len));

  const detail::PowerOps ops = detail::PowerOps::make(nu.p);
  double best = 0.0;
  for (uint32_t mask = 1; mask < (uint32_t{1} << len); ++mask) {
    if (std::popcount(mask) < 2) continue;
    int first = -1, prev = -1;
    double acc = 0.0;
    for (int b = 0; b < len; ++b) {
      if (!(mask & (uint32_t{1} << b))) continue;
      if (first < 0) {
        first = prev = b;
        continue;
      }
      acc = ops.combine(acc, ops.fwd(X.d(t[prev], t[b])));
      prev = b;
    }
    if (nu.cyclic) acc = ops.combine(acc, ops.fwd(X.d(t[prev], t[first])));
    if (acc > best) best = acc;
  }
  double value = ops.root(best);
  if (nu.cyclic) value *= detail::cyclic_scale(nu.p);
  return value;
}

double subset_weight(const NormDescriptor& nu, const FiniteMetricSpace& X,
                     const std::vector<int>& s) {
  detail::check_descriptor(nu);
  check_tuple(X, s);
  for (size_t i = 1; i < s.size(); ++i)
    if (s[i] <= s[i - 1])
      throw input_error("subset indices must be strictly increasing");
  NormDescriptor sym = nu;
  sym.symmetric = true;
  const int len = static_cast<int>(s.size());
  auto acc = [&X, &s](int i, int j) { return X.d(s[i], s[j]); };
  const double power = detail::norm_power(sym, len, acc, true);
  double value = detail::PowerOps::make(nu.p).root(power);
  if (nu.cyclic) value *= detail::cyclic_scale(nu.p);
  return value;
}

double cho_value(const FiniteMetricSpace& X, const std::vector<int>& t, double p) {
  if (std::isnan(p) || p < 1.0) throw input_error("blur exponent must satisfy p >= 1");
  check_tuple(X, t);
  const int n = static_cast<int>(t.size()) - 1;
  if (n == 0) return 0.0;

  if (p == infty) {
    std::vector<double> rr(n + 1, 0.0);
    double out = 0.0;
    for (int k = 1; k <= n; ++k) {
      double need = 0.0;
      double cover = -1.0;  // max of rr over the gap, empty gap covers nothing
      for (int i = k - 1; i >= 0; --i) {
        const double d = X.d(t[i], t[k]);
        if (d > cover && d > need) need = d;
        if (i > 0) cover = std::max(cover, rr[i]);
      }
      rr[k] = need;
      if (need > out) out = need;
    }
    return out;
  }

  const detail::PowerOps ops = detail::PowerOps::make(p);
  // prefix[k] = rr_1^p + ... + rr_k^p
  std::vector<double> prefix(n + 1, 0.0);
  for (int k = 1; k <= n; ++k) {
    double need = 0.0;
    for (int i = 0; i < k; ++i) {
      const double gap = ops.fwd(X.d(t[i], t[k])) - (prefix[k - 1] - prefix[i]);
      if (gap > need) need = gap;
    }
    prefix[k] = prefix[k - 1] + need;
  }
  return ops.root(prefix[n]);
}

bool cho_membership(const FiniteMetricSpace& X, const std::vector<int>& t,
                    double r, double p) {
  return cho_value(X, t, p) <= r;
}

}  // namespace lprips
