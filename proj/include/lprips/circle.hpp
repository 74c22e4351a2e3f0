#pragma once

#include <cstdint>

#include "lprips/metric.hpp"
#include "lprips/persistence.hpp"

namespace lprips {

// n points on the circle of perimeter one with the geodesic metric,
// equally spaced
FiniteMetricSpace sample_circle(int n);

// sorted uniform sample instead of the regular one
FiniteMetricSpace sample_circle_random(int n, uint64_t seed);

// scale at which the Vietoris-Rips complex of the circle stops being a
// circle: 2^{1/p} / (2 + 2^{1/p})
double threshold_formula(double p);

struct GridSearchResult {
  double value = 0.0;
  double a = 0.0, b = 0.0;  // first two gaps of the best triple
};

// independent estimate of the same scale: minimizes the 3-point subset
// weight over triples splitting the circle into gaps (a, b, 1-a-b), each
// at most 1/2, on a regular grid of the given resolution
GridSearchResult t_grid_search(double p, int resolution, int threads = 1);

struct CircleReport {
  double p = 2.0;
  int n = 0;
  double formula = 0.0;
  double birth = 0.0;
  double death = 0.0;
  double deviation = 0.0;
  double tolerance = 0.0;
  bool found = false;  // a degree-1 bar exists at all
  bool pass = false;
};

// samples the circle, runs persistence, and compares the death of the
// dominant degree-1 bar against the closed formula; the tolerance scales
// like the sample spacing
CircleReport circle_experiment(double p, int n, int max_dim, int threads = 1,
                               uint64_t seed = 0, bool random_points = false);

}  // namespace lprips
