#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>

#include "lprips/circle.hpp"
#include "lprips/errors.hpp"

using namespace lprips;

TEST_CASE("closed form thresholds") {
  CHECK(threshold_formula(1.0) == doctest::Approx(0.5));
  CHECK(threshold_formula(2.0) == doctest::Approx(std::sqrt(2.0) - 1.0));
  CHECK(threshold_formula(infty) == doctest::Approx(1.0 / 3.0));

  const double q = std::exp2(0.25);
  CHECK(threshold_formula(4.0) == doctest::Approx(q / (2.0 + q)));

  CHECK_THROWS_AS(threshold_formula(0.5), input_error);
}

TEST_CASE("regular circle samples carry the geodesic metric") {
  FiniteMetricSpace X = sample_circle(4);
  CHECK(X.size() == 4);
  CHECK(X.d(0, 1) == doctest::Approx(0.25));
  CHECK(X.d(0, 2) == doctest::Approx(0.5));
  CHECK(X.d(0, 3) == doctest::Approx(0.25));
  CHECK(X.d(1, 3) == doctest::Approx(0.5));

  FiniteMetricSpace hex = sample_circle(6);
  CHECK(hex.d(0, 1) == doctest::Approx(1.0 / 6.0));
  CHECK(hex.d(0, 2) == doctest::Approx(1.0 / 3.0));
  CHECK(hex.d(0, 3) == doctest::Approx(0.5));
  CHECK(hex.d(2, 5) == doctest::Approx(0.5));

  CHECK_THROWS_AS(sample_circle(2), input_error);
}

TEST_CASE("random circle samples are deterministic in the seed") {
  FiniteMetricSpace a = sample_circle_random(10, 99);
  FiniteMetricSpace b = sample_circle_random(10, 99);
  REQUIRE(a.size() == b.size());
  double max_d = 0.0;
  for (int i = 0; i < a.size(); ++i)
    for (int j = 0; j < a.size(); ++j) {
      CHECK(a.d(i, j) == b.d(i, j));
      CHECK(a.d(i, j) <= 0.5);
      max_d = std::max(max_d, a.d(i, j));
    }
  CHECK(max_d > 0.0);
  CHECK_THROWS_AS(sample_circle_random(1, 3), input_error);
}

TEST_CASE("coarse grids already land near the formula") {
  for (double p : {1.0, 2.0, infty}) {
    GridSearchResult got = t_grid_search(p, 300);
    CHECK(std::fabs(got.value - threshold_formula(p)) <= 1e-2);
  }
}

TEST_CASE("fine grids match the formula to three decimals") {
  for (double p : {1.0, 1.5, 2.0, 3.0, infty}) {
    GridSearchResult got = t_grid_search(p, 1000);
    CHECK(std::fabs(got.value - threshold_formula(p)) <= 2e-3);
  }
}

TEST_CASE("the squared exponent minimizer splits the circle as expected") {
  const int res = 1000;
  GridSearchResult got = t_grid_search(2.0, res);
  // two equal short gaps and one long one, the short gap at 1 - 1/sqrt(2)
  const double short_gap = 1.0 - 1.0 / std::sqrt(2.0);
  CHECK(std::fabs(got.a - short_gap) <= 3.0 / res);
  CHECK(std::fabs(got.b - short_gap) <= 3.0 / res);
}

TEST_CASE("grid searches are thread independent") {
  GridSearchResult one = t_grid_search(1.5, 400, 1);
  GridSearchResult four = t_grid_search(1.5, 400, 4);
  CHECK(one.value == four.value);
  CHECK(one.a == four.a);
  CHECK(one.b == four.b);
}

TEST_CASE("grid search guards its arguments") {
  CHECK_THROWS_AS(t_grid_search(2.0, 50), input_error);
  CHECK_THROWS_AS(t_grid_search(0.9, 500), input_error);
}

TEST_CASE("six regular samples die exactly at one third") {
  CircleReport rep = circle_experiment(infty, 6, 3);
  CHECK(rep.found);
  CHECK(rep.pass);
  CHECK(rep.birth == doctest::Approx(1.0 / 6.0));
  CHECK(rep.death == doctest::Approx(1.0 / 3.0));
  CHECK(rep.deviation == doctest::Approx(0.0).epsilon(1e-9));
  CHECK(rep.formula == doctest::Approx(1.0 / 3.0));
}

TEST_CASE("two dozen samples at exponent one stay within tolerance") {
  CircleReport rep = circle_experiment(1.0, 24, 2);
  CHECK(rep.found);
  CHECK(rep.birth < rep.death);
  CHECK(rep.tolerance == doctest::Approx(2.0 * 2.0 / 24.0));
  CHECK(rep.pass == (rep.found && rep.deviation <= rep.tolerance));
  CHECK(rep.pass);
}

TEST_CASE("random samples give a reproducible report") {
  CircleReport a = circle_experiment(2.0, 40, 2, 1, 7, true);
  CircleReport b = circle_experiment(2.0, 40, 2, 1, 7, true);
  CHECK(a.found);
  CHECK(a.birth == b.birth);
  CHECK(a.death == b.death);
  CHECK(a.deviation == b.deviation);
  CHECK(a.pass == b.pass);
}

TEST_CASE("degree one deaths need at least two dimensions") {
  CHECK_THROWS_AS(circle_experiment(2.0, 12, 1), input_error);
}
