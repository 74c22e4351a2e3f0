#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>
#include <cmath>
#include <vector>

#include "lprips/random_spaces.hpp"
#include "lprips/weights.hpp"

using namespace lprips;

namespace {

FiniteMetricSpace tri_space() {
  return validate_metric(
      DistanceMatrix::from_rows({{0, 1, 2}, {1, 0, 1.5}, {2, 1.5, 0}}), false);
}

FiniteMetricSpace random_space(Rng& rng, int n) {
  return rng.uniform() < 0.5 ? random_euclidean_space(rng, n, 2) : random_range_metric(rng, n);
}

// reference for subsets: minimum of the fixed-order weight over every ordering
double subset_by_enumeration(const NormDescriptor& nu, const FiniteMetricSpace& X,
                             std::vector<int> s) {
  NormDescriptor fixed = nu;
  fixed.symmetric = false;
  double best = infty;
  std::sort(s.begin(), s.end());
  do {
    best = std::min(best, tuple_weight(fixed, X, s));
  } while (std::next_permutation(s.begin(), s.end()));
  return best;
}

}  // namespace

TEST_CASE("hand-computed tuple weights on the three-point path") {
  FiniteMetricSpace X = tri_space();
  const std::vector<int> t{0, 2, 1};
  CHECK(tuple_weight(lp_norm(1), X, t) == 3.5);  // 2 + 1.5 through the detour
  CHECK(tuple_weight(lp_norm(2), X, t) == 2.5);  // sqrt(4 + 2.25)
  CHECK(tuple_weight(lp_norm(infty), X, t) == 2.0);
  CHECK(tuple_weight(lp_norm(1), X, {0, 1}) == 1.0);
  CHECK(tuple_weight(lp_norm(1), X, {0}) == 0.0);
}

TEST_CASE("repeats inside a tuple act as degeneracies") {
  FiniteMetricSpace X = tri_space();
  CHECK(tuple_weight(lp_norm(1), X, {0, 0}) == 0.0);
  CHECK(tuple_weight(lp_norm(1), X, {0, 1, 1, 0}) ==
        tuple_weight(lp_norm(1), X, {0, 1, 0}));
  CHECK(tuple_weight(lp_cyclic(2), X, {2, 2, 2}) == 0.0);
}

TEST_CASE("tuple arguments are validated") {
  FiniteMetricSpace X = tri_space();
  CHECK_THROWS_AS(tuple_weight(lp_norm(1), X, {}), input_error);
  CHECK_THROWS_AS(tuple_weight(lp_norm(1), X, {0, 3}), input_error);
  CHECK_THROWS_AS(tuple_weight(lp_norm(1), X, {-1}), input_error);
  CHECK_THROWS_AS(tuple_weight(lp_norm(0.3), X, {0, 1}), input_error);
}

TEST_CASE("dynamic program matches the subsequence oracle bit for bit") {
  const double ps[] = {1.0, 1.5, 2.0, 3.0, infty};
  Rng rng(404);
  for (int trial = 0; trial < 300; ++trial) {
    FiniteMetricSpace X = random_space(rng, 3 + rng.uniform_int(4));
    std::vector<int> t = random_tuple(rng, X.size(), 2 + rng.uniform_int(6), false);
    NormDescriptor nu;
    nu.p = ps[rng.uniform_int(5)];
    nu.cyclic = rng.uniform() < 0.5;
    CHECK(tuple_weight(nu, X, t) == tuple_weight_oracle(nu, X, t));
  }
}

TEST_CASE("the oracle rejects reordering norms and long tuples") {
  FiniteMetricSpace X = tri_space();
  CHECK_THROWS_AS(tuple_weight_oracle(lp_sym(1), X, {0, 1}), input_error);
  std::vector<int> long_tuple(21, 0);
  for (size_t i = 0; i < long_tuple.size(); ++i) long_tuple[i] = static_cast<int>(i % 3);
  CHECK_THROWS_AS(tuple_weight_oracle(lp_norm(1), X, long_tuple), cap_error);
}

TEST_CASE("hand-computed subset weights") {
  FiniteMetricSpace X = tri_space();
  CHECK(subset_weight(lp_norm(1), X, {0, 1, 2}) == 2.5);  // short edges around the middle
  CHECK(subset_weight(lp_norm(infty), X, {0, 1, 2}) == 2.0);  // the diameter
  CHECK(subset_weight(lp_cyclic(1), X, {0, 1, 2}) == 2.25);   // every cycle walks all edges
  CHECK(subset_weight(lp_norm(2), X, {0, 2}) == 2.0);
  CHECK(subset_weight(lp_norm(1), X, {1}) == 0.0);
}

TEST_CASE("subset weight equals the minimum over orderings") {
  const double ps[] = {1.0, 2.0, infty};
  Rng rng(405);
  for (int trial = 0; trial < 80; ++trial) {
    FiniteMetricSpace X = random_space(rng, 3 + rng.uniform_int(3));
    const int k = 2 + rng.uniform_int(std::min(X.size(), 4) - 1);
    std::vector<int> pool(X.size());
    for (int i = 0; i < X.size(); ++i) pool[i] = i;
    for (int i = X.size() - 1; i > 0; --i) std::swap(pool[i], pool[rng.uniform_int(i + 1)]);
    std::vector<int> s(pool.begin(), pool.begin() + k);
    std::sort(s.begin(), s.end());

    NormDescriptor nu;
    nu.p = ps[rng.uniform_int(3)];
    nu.cyclic = rng.uniform() < 0.5;
    CHECK(subset_weight(nu, X, s) ==
          doctest::Approx(subset_by_enumeration(nu, X, s)).epsilon(1e-12));
  }
}

TEST_CASE("subset indices must be strictly increasing and in range") {
  FiniteMetricSpace X = tri_space();
  CHECK_THROWS_AS(subset_weight(lp_norm(1), X, {1, 0}), input_error);
  CHECK_THROWS_AS(subset_weight(lp_norm(1), X, {0, 0}), input_error);
  CHECK_THROWS_AS(subset_weight(lp_norm(1), X, {0, 5}), input_error);
}

TEST_CASE("composed blur radii reproduce the tuple weight") {
  const double ps[] = {1.0, 1.7, 2.0, 3.0, infty};
  Rng rng(406);
  for (int trial = 0; trial < 200; ++trial) {
    FiniteMetricSpace X = random_space(rng, 3 + rng.uniform_int(4));
    std::vector<int> t = random_tuple(rng, X.size(), 2 + rng.uniform_int(5), true);
    const double p = ps[rng.uniform_int(5)];
    const double w = tuple_weight(lp_norm(p), X, t);
    CHECK(cho_value(X, t, p) == doctest::Approx(w).epsilon(1e-9));
    CHECK(cho_membership(X, t, w + 1e-6, p));
    if (w > 1e-5) CHECK(!cho_membership(X, t, w - 1e-6, p));
  }
}

TEST_CASE("blur radii of a single point vanish") {
  FiniteMetricSpace X = tri_space();
  CHECK(cho_value(X, {2}, 2.0) == 0.0);
  CHECK(cho_membership(X, {2}, 0.0, 2.0));
  CHECK_THROWS_AS(cho_value(X, {0, 1}, 0.9), input_error);
}
