#pragma once

#include <cstdint>
#include <vector>

#include "lprips/metric.hpp"
#include "lprips/norms.hpp"
#include "lprips/persistence.hpp"

namespace lprips {

// correspondence presented as a pair of maps; every correspondence contains
// one of this shape with no larger distortion, so the minimum over these
// pairs computes the exact distance
struct Correspondence {
  std::vector<int> f;  // X -> Y
  std::vector<int> g;  // Y -> X
  double distortion = 0.0;
};

struct GromovHausdorff {
  double value = 0.0;
  Correspondence best;
};

// exact Gromov-Hausdorff distance by exhausting map pairs in lexicographic
// order with distortion pruning; spaces above 5 points are refused
GromovHausdorff gromov_hausdorff(const FiniteMetricSpace& X, const FiniteMetricSpace& Y);

// bottleneck distance between the bars of one dimension; infinite bars must
// match each other or the distance is infinite
double bottleneck_distance(const Barcode& A, const Barcode& B, int dim);

struct DegreeStability {
  int degree = 0;
  double bottleneck = 0.0;
  double bound = 0.0;  // 2 * C_{degree+2}(nu) * gh
  bool pass = false;
};

struct StabilityReport {
  double p = 2.0;
  double gh = 0.0;
  std::vector<DegreeStability> degrees;
  bool all_pass = true;
};

// compares the barcodes of the two spaces against the bound
// 2 * C_{degree+2}(nu) * gh for every requested degree
StabilityReport stability_report(const FiniteMetricSpace& X, const FiniteMetricSpace& Y,
                                 const NormDescriptor& nu, const std::vector<int>& degrees,
                                 int max_dim, int threads = 1);

struct StabilityTrial {
  uint64_t seed = 0;
  int n_x = 0, n_y = 0;
  double gh = 0.0;
  std::vector<StabilityReport> per_p;
  bool pass = true;
};

struct StabilityCampaign {
  std::vector<StabilityTrial> trials;
  bool all_pass = true;
};

// seeded random pairs of small spaces (perturbations and unrelated draws)
StabilityCampaign stability_campaign(uint64_t seed, int trials, const std::vector<double>& ps,
                                     const std::vector<int>& degrees, int max_dim,
                                     int threads = 1);

}  // namespace lprips
