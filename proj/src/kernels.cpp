#include "lprips/kernels.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

namespace lprips {

namespace {

using Batch = const std::vector<std::vector<int>>&;
using Eval = double (*)(const NormDescriptor&, const FiniteMetricSpace&, const std::vector<int>&);

std::vector<double> run_serial(Eval f, const NormDescriptor& nu, const FiniteMetricSpace& X,
                               Batch items) {
  std::vector<double> out(items.size());
  for (size_t i = 0; i < items.size(); ++i) out[i] = f(nu, X, items[i]);
  return out;
}

std::vector<double> run_parallel(Eval f, const NormDescriptor& nu, const FiniteMetricSpace& X,
                                 Batch items, int threads) {
  std::vector<double> out(items.size());
  const long long n = static_cast<long long>(items.size());
#ifdef _OPENMP
#pragma omp parallel for schedule(static) num_threads(threads > 0 ? threads : 1)
#endif
  for (long long i = 0; i < n; ++i) out[i] = f(nu, X, items[i]);
  (void)threads;
  return out;
}

}  // namespace

std::vector<double> tuple_weights_serial(const NormDescriptor& nu, const FiniteMetricSpace& X,
                                         Batch tuples) {
  return run_serial(&tuple_weight, nu, X, tuples);
}

std::vector<double> tuple_weights_parallel(const NormDescriptor& nu, const FiniteMetricSpace& X,
                                           Batch tuples, int threads) {
  return run_parallel(&tuple_weight, nu, X, tuples, threads);
}

std::vector<double> subset_weights_serial(const NormDescriptor& nu, const FiniteMetricSpace& X,
                                          Batch subsets) {
  return run_serial(&subset_weight, nu, X, subsets);
}

std::vector<double> subset_weights_parallel(const NormDescriptor& nu, const FiniteMetricSpace& X,
                                            Batch subsets, int threads) {
  return run_parallel(&subset_weight, nu, X, subsets, threads);
}

std::vector<double> batch_tuple_weights(const NormDescriptor& nu, const FiniteMetricSpace& X,
                                        Batch tuples, int threads) {
  return threads <= 1 ? tuple_weights_serial(nu, X, tuples)
                      : tuple_weights_parallel(nu, X, tuples, threads);
}

std::vector<double> batch_subset_weights(const NormDescriptor& nu, const FiniteMetricSpace& X,
                                         Batch subsets, int threads) {
  return threads <= 1 ? subset_weights_serial(nu, X, subsets)
                      : subset_weights_parallel(nu, X, subsets, threads);
}

}  // namespace lprips
