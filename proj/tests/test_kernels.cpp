#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <vector>

#include "lprips/kernels.hpp"
#include "lprips/random_spaces.hpp"

using namespace lprips;

namespace {

struct Batch {
  FiniteMetricSpace space;
  std::vector<std::vector<int>> tuples;
  std::vector<std::vector<int>> subsets;
};

Batch make_batch(uint64_t seed, int n_items) {
  Rng rng(seed);
  Batch b{random_euclidean_space(rng, 12, 3), {}, {}};
  for (int i = 0; i < n_items; ++i) {
    b.tuples.push_back(random_tuple(rng, 12, 2 + rng.uniform_int(5), false));
    std::vector<int> s;
    int v = rng.uniform_int(3);
    while (v < 12 && static_cast<int>(s.size()) < 4) {
      s.push_back(v);
      v += 1 + rng.uniform_int(4);
    }
    if (s.size() < 2) s = {0, 11};
    b.subsets.push_back(s);
  }
  return b;
}

}  // namespace

TEST_CASE("parallel tuple weights are bit-identical to the serial pass") {
  Batch b = make_batch(91, 400);
  const NormDescriptor descs[] = {lp_norm(1), lp_norm(2), lp_norm(infty), lp_cyclic(2)};
  for (const auto& nu : descs) {
    const std::vector<double> ref = tuple_weights_serial(nu, b.space, b.tuples);
    REQUIRE(ref.size() == b.tuples.size());
    for (int threads : {2, 4, 7}) {
      const std::vector<double> par = tuple_weights_parallel(nu, b.space, b.tuples, threads);
      CHECK(par == ref);
    }
    for (size_t i = 0; i < ref.size(); i += 37)
      CHECK(ref[i] == tuple_weight(nu, b.space, b.tuples[i]));
  }
}

TEST_CASE("parallel subset weights are bit-identical to the serial pass") {
  Batch b = make_batch(92, 400);
  const NormDescriptor descs[] = {lp_norm(infty), lp_sym(2), lp_cyclic_sym(1)};
  for (const auto& nu : descs) {
    const std::vector<double> ref = subset_weights_serial(nu, b.space, b.subsets);
    for (int threads : {2, 4}) {
      CHECK(subset_weights_parallel(nu, b.space, b.subsets, threads) == ref);
    }
    for (size_t i = 0; i < ref.size(); i += 41)
      CHECK(ref[i] == subset_weight(nu, b.space, b.subsets[i]));
  }
}

TEST_CASE("dispatchers route on the thread count") {
  Batch b = make_batch(93, 50);
  const NormDescriptor nu = lp_norm(2);
  const std::vector<double> ref = tuple_weights_serial(nu, b.space, b.tuples);
  CHECK(batch_tuple_weights(nu, b.space, b.tuples, 1) == ref);
  CHECK(batch_tuple_weights(nu, b.space, b.tuples, 0) == ref);
  CHECK(batch_tuple_weights(nu, b.space, b.tuples, 4) == ref);
  const std::vector<double> sref = subset_weights_serial(nu, b.space, b.subsets);
  CHECK(batch_subset_weights(nu, b.space, b.subsets, 1) == sref);
  CHECK(batch_subset_weights(nu, b.space, b.subsets, 3) == sref);
}

TEST_CASE("empty batches stay empty") {
  Batch b = make_batch(94, 0);
  CHECK(tuple_weights_serial(lp_norm(1), b.space, {}).empty());
  CHECK(tuple_weights_parallel(lp_norm(1), b.space, {}, 4).empty());
  CHECK(subset_weights_parallel(lp_norm(1), b.space, {}, 4).empty());
}

TEST_CASE("more threads than items is harmless") {
  Batch b = make_batch(95, 3);
  CHECK(tuple_weights_parallel(lp_norm(2), b.space, b.tuples, 64) ==
        tuple_weights_serial(lp_norm(2), b.space, b.tuples));
}
