#pragma once

#include <vector>

#include "lprips/weights.hpp"

namespace lprips {

// batch weight evaluation. The parallel variants split the index range and
// write each result into its own slot, so for any thread count the output is
// bit-identical to the serial reference (kept for tests and benchmarks).

std::vector<double> tuple_weights_serial(const NormDescriptor& nu, const FiniteMetricSpace& X,
                                         const std::vector<std::vector<int>>& tuples);
std::vector<double> tuple_weights_parallel(const NormDescriptor& nu, const FiniteMetricSpace& X,
                                           const std::vector<std::vector<int>>& tuples,
                                           int threads);

std::vector<double> subset_weights_serial(const NormDescriptor& nu, const FiniteMetricSpace& X,
                                          const std::vector<std::vector<int>>& subsets);
std::vector<double> subset_weights_parallel(const NormDescriptor& nu, const FiniteMetricSpace& X,
                                            const std::vector<std::vector<int>>& subsets,
                                            int threads);

// dispatchers used by the builders; threads <= 1 takes the serial path
std::vector<double> batch_tuple_weights(const NormDescriptor& nu, const FiniteMetricSpace& X,
                                        const std::vector<std::vector<int>>& tuples, int threads);
std::vector<double> batch_subset_weights(const NormDescriptor& nu, const FiniteMetricSpace& X,
                                         const std::vector<std::vector<int>>& subsets, int threads);

}  // namespace lprips
