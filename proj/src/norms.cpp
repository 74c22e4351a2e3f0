#include "lprips/norms.hpp"

namespace lprips {

double norm_eval(const NormDescriptor& nu, const DistanceMatrix& D) {
  detail::check_descriptor(nu);
  const int n1 = D.order();
  auto acc = [&D](int i, int j) { return D(i, j); };
  const double power =
      detail::norm_power(nu, n1, acc, D.is_symmetric(0.0));
  double value = detail::PowerOps::make(nu.p).root(power);
  if (nu.cyclic) value *= detail::cyclic_scale(nu.p);
  return value;
}

double norm_constant(const NormDescriptor& nu, int n) {
  detail::check_descriptor(nu);
  if (n < 1) throw input_error("norm constant is defined for n >= 1");
  NormDescriptor plain = nu;
  plain.symmetric = false;
  return norm_eval(plain, all_ones_matrix(n + 1));
}

bool ellipse_membership(const NormDescriptor& nu, const FiniteMetricSpace& X,
                        int x, int y, int a, const LeftInterval& L) {
  detail::check_descriptor(nu);
  for (int idx : {x, y, a})
    if (idx < 0 || idx >= X.size())
      throw input_error("ellipse point index " + std::to_string(idx) + " out of range");
  if (nu.p == infty && !nu.cyclic)
    return L.contains(std::max(X.d(x, a), X.d(a, y)));
  DistanceMatrix D(3);
  D.set(0, 1, X.d(x, a));
  D.set(1, 0, X.d(a, x));
  D.set(1, 2, X.d(a, y));
  D.set(2, 1, X.d(y, a));
  D.set(0, 2, X.d(x, y));
  D.set(2, 0, X.d(y, x));
  return L.contains(norm_eval(nu, D));
}

}  // namespace lprips
