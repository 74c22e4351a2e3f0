#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <vector>

#include "lprips/field.hpp"

using namespace lprips;

TEST_CASE("field construction accepts primes only") {
  CHECK_NOTHROW(PrimeField(2));
  CHECK_NOTHROW(PrimeField(97));
  CHECK_THROWS_AS(PrimeField(1), input_error);
  CHECK_THROWS_AS(PrimeField(4), input_error);
  CHECK_THROWS_AS(PrimeField(91), input_error);  // 7 * 13
  CHECK_THROWS_AS(PrimeField(-3), input_error);
}

TEST_CASE("arithmetic wraps and inverts correctly") {
  for (int p : {2, 3, 5, 7, 13}) {
    PrimeField f(p);
    CHECK(f.reduce(-1) == p - 1);
    CHECK(f.reduce(static_cast<long long>(p) * 5 + 3) == 3 % p);
    for (int a = 1; a < p; ++a) {
      CHECK(f.mul(a, f.inv(a)) == 1);
      CHECK(f.add(a, f.neg(a)) == 0);
      for (int b = 0; b < p; ++b) {
        CHECK(f.add(f.sub(a, b), b) == a);
        CHECK(f.mul(a, b) == (a * b) % p);
      }
    }
    CHECK(f.neg(0) == 0);
    CHECK_THROWS_AS(f.inv(0), input_error);
  }
}

TEST_CASE("sparse vectors reduce into the field") {
  PrimeField f3(3);
  SVec v{{0, 4}, {2, -1}, {5, 3}};
  CHECK(sv_reduce_mod(v, f3) == SparseVec{{0, 1}, {2, 2}});  // 4 -> 1, -1 -> 2, 3 drops
  CHECK(sv_reduce_mod({}, f3).empty());
}

TEST_CASE("sv_add cancels and sv_axpy combines") {
  PrimeField f3(3);
  SparseVec a{{0, 1}, {1, 2}};
  SparseVec b{{1, 1}, {3, 1}};
  SparseVec sum = sv_add(a, b, f3);
  CHECK(sum == SparseVec{{0, 1}, {3, 1}});  // 2 + 1 = 0 mod 3 drops index 1

  SparseVec axpy = sv_axpy(a, 2, b, f3);  // a + 2b
  CHECK(axpy == SparseVec{{0, 1}, {1, 1}, {3, 2}});

  CHECK(sv_scale(a, 0, f3).empty());
  CHECK(sv_scale(a, 2, f3) == SparseVec{{0, 2}, {1, 1}});

  CHECK(sv_pivot(sum) == 3);
  CHECK(sv_pivot(SparseVec{}) == -1);
}

TEST_CASE("ranks over different primes can disagree") {
  // columns (1,1) and (1,-1): determinant -2, so singular exactly mod 2
  std::vector<SVec> cols{{{0, 1}, {1, 1}}, {{0, 1}, {1, -1}}};
  CHECK(rank_mod2(2, cols) == 1);
  CHECK(rank_mod_p(cols, PrimeField(3)) == 2);
  CHECK(rank_mod_p(cols, PrimeField(5)) == 2);
}

TEST_CASE("rank of the triangle boundary matrix") {
  // edges 01, 02, 12 against vertices 0, 1, 2
  std::vector<SVec> cols{{{0, -1}, {1, 1}}, {{0, -1}, {2, 1}}, {{1, -1}, {2, 1}}};
  CHECK(rank_mod2(3, cols) == 2);
  CHECK(rank_mod_p(cols, PrimeField(3)) == 2);
}

TEST_CASE("dense rank elimination") {
  PrimeField f2(2);
  CHECK(dense_rank({1, 0, 0, 1}, 2, 2, f2) == 2);
  CHECK(dense_rank({1, 1, 1, 1}, 2, 2, f2) == 1);
  CHECK(dense_rank({0, 0, 0, 0, 0, 0}, 2, 3, f2) == 0);
  CHECK(dense_rank({1, 2, 2, 4, 3, 6}, 3, 2, PrimeField(7)) == 1);
  CHECK(dense_rank({}, 0, 0, f2) == 0);
}

TEST_CASE("the echelon accumulator tracks tails through reductions") {
  PrimeField f2(2);
  AugReducer red(f2);

  // store e0+e1 with tail marking column 0, then e1 with tail marking column 1
  CHECK(red.add({{0, 1}, {1, 1}}, {{0, 1}}) == 0);
  CHECK(red.add({{1, 1}}, {{1, 1}}) == 1);
  CHECK(red.rank() == 2);

  // e0 = (e0+e1) + e1: reduction must cancel the head and collect both tails
  SparseVec head{{0, 1}};
  SparseVec tail;
  red.reduce(head, tail);
  CHECK(head.empty());
  CHECK(tail == SparseVec{{0, 1}, {1, 1}});

  // dependent columns are rejected by add
  CHECK(red.add({{0, 1}}, {{2, 1}}) == -1);
  CHECK(red.rank() == 2);
}

TEST_CASE("store normalizes the pivot coefficient to one") {
  PrimeField f5(5);
  AugReducer red(f5);
  int slot = red.add({{0, 3}}, {{0, 1}});
  REQUIRE(slot == 0);
  CHECK(red.head(0) == SparseVec{{0, 1}});
  // the tail rides through the same scaling: 1 * inv(3) = 2 mod 5
  CHECK(red.tail(0) == SparseVec{{0, 2}});
}
