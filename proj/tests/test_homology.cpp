#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <vector>

#include "lprips/homology.hpp"
#include "lprips/random_spaces.hpp"

using namespace lprips;

namespace {

SimplicialComplex hexagon() {
  return SimplicialComplex::from_maximal(
      6, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 5}, {5, 0}});
}

// minimal triangulation of the projective plane: every pair of the six
// vertices is an edge and each edge lies in exactly two of the ten triangles
SimplicialComplex projective_plane() {
  return SimplicialComplex::from_maximal(6, {{0, 1, 2},
                                             {0, 2, 3},
                                             {0, 3, 4},
                                             {0, 4, 5},
                                             {0, 1, 5},
                                             {1, 2, 4},
                                             {2, 3, 5},
                                             {1, 3, 4},
                                             {2, 4, 5},
                                             {1, 3, 5}});
}

FiniteMetricSpace two_points(double d) {
  return validate_metric(DistanceMatrix::from_rows({{0, d}, {d, 0}}), false);
}

}  // namespace

TEST_CASE("betti numbers of elementary complexes") {
  SimplicialComplex circle = hexagon();
  CHECK(betti(circle, 0, 2) == 1);
  CHECK(betti(circle, 1, 2) == 1);
  CHECK(betti(circle, 1, 3) == 1);
  CHECK(betti(circle, 2, 2) == 0);

  SimplicialComplex two = SimplicialComplex::from_maximal(4, {{0, 1}, {2, 3}});
  CHECK(betti(two, 0, 2) == 2);
  CHECK(betti(two, 1, 2) == 0);

  SimplicialComplex sphere = SimplicialComplex::from_maximal(
      4, {{0, 1, 2}, {0, 1, 3}, {0, 2, 3}, {1, 2, 3}});
  CHECK(betti(sphere, 0, 2) == 1);
  CHECK(betti(sphere, 1, 2) == 0);
  CHECK(betti(sphere, 2, 2) == 1);
  CHECK(betti(sphere, 2, 3) == 1);
}

TEST_CASE("the projective plane separates the coefficient fields") {
  SimplicialComplex rp2 = projective_plane();
  REQUIRE(rp2.faces[1].size() == 15);
  REQUIRE(rp2.faces[2].size() == 10);
  CHECK(betti(rp2, 0, 2) == 1);
  CHECK(betti(rp2, 1, 2) == 1);
  CHECK(betti(rp2, 2, 2) == 1);
  CHECK(betti(rp2, 0, 3) == 1);
  CHECK(betti(rp2, 1, 3) == 0);
  CHECK(betti(rp2, 2, 3) == 0);
  CHECK(betti(rp2, 1, 5) == 0);
}

TEST_CASE("simplicial boundaries square to zero") {
  ChainComplex cc = chain_of_simplicial(projective_plane());
  REQUIRE(cc.degrees() == 3);
  PrimeField f(5);
  for (int j = 0; j < cc.dim_at(2); ++j) {
    SparseVec acc;
    for (const auto& [row, coef] : cc.boundary_at(2)[j])
      acc = sv_axpy(acc, f.reduce(coef), sv_reduce_mod(cc.boundary_at(1)[row], f), f);
    CHECK(acc.empty());
  }
}

TEST_CASE("tuple boundaries drop degenerate faces and square to zero") {
  FiniteMetricSpace X = two_points(1.0);
  TupleChainComplex C = build_tuple_complex(X, lp_norm(1), LeftInterval::at_most(2), 2);
  ChainComplex cc = chain_of_tuples(C);
  REQUIRE(cc.dim_at(2) == 2);
  // the middle face of (0,1,0) is degenerate, leaving the two degree-1 tuples
  CHECK(cc.boundary_at(2)[0].size() == 2);
  PrimeField f(3);
  for (int j = 0; j < cc.dim_at(2); ++j) {
    SparseVec acc;
    for (const auto& [row, coef] : cc.boundary_at(2)[j])
      acc = sv_axpy(acc, f.reduce(coef), sv_reduce_mod(cc.boundary_at(1)[row], f), f);
    CHECK(acc.empty());
  }
}

TEST_CASE("tuple complex betti on the two-point space") {
  FiniteMetricSpace X = two_points(1.0);
  TupleChainComplex tight = build_tuple_complex(X, lp_norm(1), LeftInterval::at_most(1), 2);
  CHECK(betti(tight, 0, 2) == 1);
  CHECK(betti(tight, 1, 2) == 1);  // the round trip is not yet filled at r=1
  CHECK(betti(tight, 1, 3) == 1);
  CHECK_THROWS_AS(betti(tight, 2, 2), input_error);  // truncated from above

  TupleChainComplex loose = build_tuple_complex(X, lp_norm(1), LeftInterval::at_most(2), 3);
  CHECK(betti(loose, 1, 2) == 0);  // the degree-2 filler arrived
}

TEST_CASE("homology basis expresses cycles in its representatives") {
  ChainComplex cc = chain_of_simplicial(hexagon());
  HomologyBasis basis(cc, 1, 2);
  REQUIRE(basis.rank() == 1);
  CHECK(basis.degree() == 1);

  CHECK(basis.express(basis.rep(0)) == std::vector<int>{1});
  CHECK(basis.express({}) == std::vector<int>{0});
  // a single edge is not a cycle
  CHECK_THROWS_AS(basis.express({{0, 1}}), input_error);
}

TEST_CASE("induced maps on the circle detect orientation") {
  SimplicialComplex circle = hexagon();

  InducedMap id = induced_map(circle, circle, {0, 1, 2, 3, 4, 5}, 1, 2);
  CHECK(id.src_rank == 1);
  CHECK(id.tgt_rank == 1);
  CHECK(id.rank == 1);
  CHECK(id.matrix == std::vector<std::vector<int>>{{1}});

  // rotation is homotopic to the identity
  InducedMap rot = induced_map(circle, circle, {1, 2, 3, 4, 5, 0}, 1, 3);
  CHECK(rot.matrix == std::vector<std::vector<int>>{{1}});

  // reflection reverses the fundamental class, visible away from char 2
  InducedMap refl3 = induced_map(circle, circle, {0, 5, 4, 3, 2, 1}, 1, 3);
  CHECK(refl3.matrix == std::vector<std::vector<int>>{{2}});
  CHECK(refl3.rank == 1);
  InducedMap refl2 = induced_map(circle, circle, {0, 5, 4, 3, 2, 1}, 1, 2);
  CHECK(refl2.matrix == std::vector<std::vector<int>>{{1}});
}

TEST_CASE("filling the circle kills its fundamental class") {
  SimplicialComplex circle = hexagon();
  std::vector<std::vector<int>> cone_faces;
  for (int i = 0; i < 6; ++i) cone_faces.push_back({i, (i + 1) % 6, 6});
  SimplicialComplex cone = SimplicialComplex::from_maximal(7, cone_faces);
  CHECK(betti(cone, 1, 2) == 0);

  InducedMap incl = induced_map(circle, cone, {0, 1, 2, 3, 4, 5}, 1, 2);
  CHECK(incl.src_rank == 1);
  CHECK(incl.tgt_rank == 0);
  CHECK(incl.rank == 0);
}

TEST_CASE("induced maps reject images outside the target") {
  SimplicialComplex circle = hexagon();
  // sending 1 next to 3 would need the chord {0,3}
  CHECK_THROWS_AS(induced_map(circle, circle, {0, 3, 2, 3, 4, 5}, 1, 2), input_error);
}

TEST_CASE("induced maps between tuple complexes") {
  FiniteMetricSpace X = two_points(1.0);
  TupleChainComplex C = build_tuple_complex(X, lp_norm(1), LeftInterval::at_most(1), 2);
  for (int p : {2, 3}) {
    InducedMap swap = induced_map(C, C, {1, 0}, 1, p);
    CHECK(swap.src_rank == 1);
    CHECK(swap.rank == 1);
    CHECK(swap.matrix == std::vector<std::vector<int>>{{1}});
  }
}

TEST_CASE("prism identity for the identity pair costs nothing") {
  FiniteMetricSpace X = two_points(1.0);
  TupleChainComplex src = build_tuple_complex(X, lp_norm(1), LeftInterval::at_most(1), 2);
  // same threshold works for the identity; the target just needs one more degree
  TupleChainComplex tgt = build_tuple_complex(X, lp_norm(1), LeftInterval::at_most(1), 3);
  HomotopyReport rep = chain_homotopy_check(src, tgt, {0, 1}, {0, 1}, 2);
  CHECK(rep.ok);
}

TEST_CASE("prism identity for the swap needs a padded target") {
  FiniteMetricSpace X = two_points(1.0);
  TupleChainComplex src = build_tuple_complex(X, lp_norm(1), LeftInterval::at_most(1), 2);

  // displacement 1 against the order-4 constant: target threshold 1 + 3
  TupleChainComplex tgt = build_tuple_complex(
      X, lp_norm(1), LeftInterval::at_most(1).scaled_shifted(1.0, 3.0), 3);
  for (int p : {2, 3}) {
    HomotopyReport rep = chain_homotopy_check(src, tgt, {0, 1}, {1, 0}, p);
    CHECK(rep.ok);
  }

  // without the pad the prism over (0,1) is missing from the target
  TupleChainComplex tgt_nopad = build_tuple_complex(X, lp_norm(1), LeftInterval::at_most(1), 3);
  CHECK_THROWS_AS(chain_homotopy_check(src, tgt_nopad, {0, 1}, {1, 0}, 2), input_error);
}

TEST_CASE("random tuple boundaries always square to zero") {
  Rng rng(23);
  for (int trial = 0; trial < 10; ++trial) {
    FiniteMetricSpace X = random_euclidean_space(rng, 4, 2);
    TupleChainComplex C =
        build_tuple_complex(X, lp_norm(2), LeftInterval::at_most(0.5 + rng.uniform()), 3);
    ChainComplex cc = chain_of_tuples(C);
    PrimeField f(trial % 2 ? 2 : 3);
    for (int k = 2; k < cc.degrees(); ++k)
      for (int j = 0; j < cc.dim_at(k); ++j) {
        SparseVec acc;
        for (const auto& [row, coef] : cc.boundary_at(k)[j])
          acc = sv_axpy(acc, f.reduce(coef), sv_reduce_mod(cc.boundary_at(k - 1)[row], f), f);
        CHECK(acc.empty());
      }
  }
}
