#include "lprips/selftest.hpp"

#include <algorithm>
#include <cmath>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include "lprips/chain.hpp"
#include "lprips/circle.hpp"
#include "lprips/complexes.hpp"
#include "lprips/homology.hpp"
#include "lprips/io.hpp"
#include "lprips/magnitude.hpp"
#include "lprips/random_spaces.hpp"
#include "lprips/stability.hpp"
#include "lprips/weights.hpp"

namespace lprips {

namespace {

struct Report {
  std::ostream& out;
  bool all = true;

  void line(const std::string& name, bool ok, const std::string& detail = "") {
    out << (ok ? "[ ok ] " : "[FAIL] ") << name;
    if (!detail.empty()) out << ": " << detail;
    out << "\n";
    all = all && ok;
  }
};

FiniteMetricSpace random_space(Rng& rng, int n) {
  return rng.uniform() < 0.5 ? random_euclidean_space(rng, n, 2) : random_range_metric(rng, n);
}

// the axioms are stated on the cone of pseudometric matrices, so the
// generator has to stay inside it
DistanceMatrix random_pseudometric_matrix(Rng& rng, int n) {
  double pick = rng.uniform();
  if (pick < 0.4) return random_range_metric(rng, n).dist;
  if (pick < 0.8) return random_graph_metric(rng, n).dist;
  return random_pseudometric(rng, n, 1 + rng.uniform_int(n)).dist;
}

bool norm_axioms(Rng& rng, std::string& detail) {
  const NormDescriptor families[] = {lp_norm(1), lp_norm(2),        lp_norm(infty),
                                     lp_sym(2),  lp_cyclic_sym(2),  lp_cyclic(1)};
  for (const auto& nu : families) {
    if (std::fabs(norm_constant(nu, 1) - 1.0) > 1e-12) {
      detail = "unit matrix does not evaluate to 1";
      return false;
    }
    for (int trial = 0; trial < 100; ++trial) {
      int n = 2 + rng.uniform_int(4);
      DistanceMatrix a = random_pseudometric_matrix(rng, n);
      DistanceMatrix b = random_pseudometric_matrix(rng, n);
      double va = norm_eval(nu, a), vb = norm_eval(nu, b);

      double lam = rng.uniform(0.1, 3.0);
      DistanceMatrix s(n), sum(n);
      for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
          if (i != j) {
            s.set(i, j, lam * a(i, j));
            sum.set(i, j, a(i, j) + b(i, j));
          }
      if (std::fabs(norm_eval(nu, s) - lam * va) > 1e-9 * (1.0 + lam * va)) {
        detail = "homogeneity";
        return false;
      }
      double vsum = norm_eval(nu, sum);
      if (!nu.symmetric && vsum > va + vb + 1e-9) {
        detail = "subadditivity";
        return false;
      }
      if (nu.symmetric) {
        // reordering-minimized values are only subadditive against
        // permutation-invariant shifts; see the counterexample below
        double c = rng.uniform(0.1, 2.0);
        DistanceMatrix shifted(n);
        for (int i = 0; i < n; ++i)
          for (int j = 0; j < n; ++j)
            if (i != j) shifted.set(i, j, a(i, j) + c);
        if (norm_eval(nu, shifted) > va + c * norm_constant(nu, n - 1) + 1e-9) {
          detail = "shift subadditivity";
          return false;
        }
      }
      if (va > vsum + 1e-9) {
        detail = "monotonicity";
        return false;
      }
      // duplicating a point must not move the value at all
      std::vector<int> dup;
      int rep = rng.uniform_int(n);
      for (int i = 0; i < n; ++i) {
        dup.push_back(i);
        if (i == rep) dup.push_back(i);
      }
      if (norm_eval(nu, restrict_matrix(a, dup)) != va) {
        detail = "degeneracy invariance";
        return false;
      }
      if (nu.symmetric) {
        std::vector<int> perm(n);
        for (int i = 0; i < n; ++i) perm[i] = i;
        for (int i = n - 1; i > 0; --i) std::swap(perm[i], perm[rng.uniform_int(i + 1)]);
        DistanceMatrix pm(n);
        for (int i = 0; i < n; ++i)
          for (int j = 0; j < n; ++j)
            if (i != j) pm.set(i, j, a(perm[i], perm[j]));
        if (norm_eval(nu, pm) != va) {
          detail = "permutation invariance";
          return false;
        }
      }
    }
  }
  // General subadditivity genuinely fails for the reordering-minimized
  // families: two collinear triples whose midpoints differ are minimized by
  // different orders, and the sum matrix cannot use either one.
  DistanceMatrix ca = DistanceMatrix::from_rows({{0, 2, 1}, {2, 0, 1}, {1, 1, 0}});
  DistanceMatrix cb = DistanceMatrix::from_rows({{0, 1, 1}, {1, 0, 2}, {1, 2, 0}});
  DistanceMatrix cs = DistanceMatrix::from_rows({{0, 3, 2}, {3, 0, 3}, {2, 3, 0}});
  if (norm_eval(lp_sym(1), ca) != 2.0 || norm_eval(lp_sym(1), cb) != 2.0 ||
      norm_eval(lp_sym(1), cs) != 5.0) {
    detail = "reordering counterexample values moved";
    return false;
  }
  return true;
}

bool weight_dual_route(Rng& rng, std::string& detail) {
  const double ps[] = {1.0, 2.0, 3.0, infty};
  for (int trial = 0; trial < 100; ++trial) {
    FiniteMetricSpace X = random_space(rng, 3 + rng.uniform_int(4));
    std::vector<int> t = random_tuple(rng, X.size(), 2 + rng.uniform_int(5), true);
    NormDescriptor nu;
    nu.p = ps[rng.uniform_int(4)];
    nu.cyclic = rng.uniform() < 0.5;
    if (tuple_weight(nu, X, t) != tuple_weight_oracle(nu, X, t)) {
      detail = "bitmask oracle disagrees with the dynamic program";
      return false;
    }
  }
  for (int trial = 0; trial < 50; ++trial) {
    FiniteMetricSpace X = random_space(rng, 3 + rng.uniform_int(3));
    std::vector<int> t = random_tuple(rng, X.size(), 2 + rng.uniform_int(4), true);
    NormDescriptor nu;
    nu.p = ps[rng.uniform_int(4)];
    nu.cyclic = rng.uniform() < 0.5;
    NormDescriptor sym = nu;
    sym.symmetric = true;
    std::vector<int> s = t;
    std::sort(s.begin(), s.end());
    double brute = infty;
    do
      brute = std::min(brute, tuple_weight(nu, X, s));
    while (std::next_permutation(s.begin(), s.end()));
    if (tuple_weight(sym, X, t) != brute) {
      detail = "reordering search disagrees with permutation enumeration";
      return false;
    }
  }
  return true;
}

bool greedy_radii(Rng& rng, std::string& detail) {
  const double ps[] = {1.0, 2.0, infty};
  for (int trial = 0; trial < 100; ++trial) {
    FiniteMetricSpace X = random_space(rng, 3 + rng.uniform_int(4));
    std::vector<int> t = random_tuple(rng, X.size(), 2 + rng.uniform_int(4), true);
    double p = ps[trial % 3];
    double w = tuple_weight(lp_norm(p), X, t);
    double c = cho_value(X, t, p);
    if (std::fabs(c - w) > 1e-9 * (1.0 + w)) {
      detail = "greedy value drifts from the tuple weight";
      return false;
    }
    if (!cho_membership(X, t, w + 1e-6, p) || cho_membership(X, t, w - 1e-6, p)) {
      detail = "membership flips on the wrong side of the weight";
      return false;
    }
  }
  return true;
}

bool face_order(Rng& rng, std::string& detail) {
  for (int trial = 0; trial < 10; ++trial) {
    FiniteMetricSpace X = random_space(rng, 3 + rng.uniform_int(3));
    NormDescriptor nu = trial % 2 ? lp_norm(1) : lp_norm(2);
    TupleChainComplex C = build_tuple_complex(X, nu, LeftInterval::at_most(2.5), 3);
    for (int k = 1; k <= C.max_deg; ++k)
      for (size_t j = 0; j < C.basis[k].size(); ++j) {
        const auto& t = C.basis[k][j];
        for (size_t drop = 0; drop < t.size(); ++drop) {
          std::vector<int> face;
          for (size_t i = 0; i < t.size(); ++i)
            if (i != drop) face.push_back(t[i]);
          bool degen = false;
          for (size_t i = 0; i + 1 < face.size(); ++i) degen = degen || face[i] == face[i + 1];
          if (degen) continue;
          if (tuple_weight(nu, X, face) > C.weights[k][j]) {
            detail = "face heavier than its tuple";
            return false;
          }
        }
      }
    FilteredComplex F = build_vr_filtration(X, nu, 3);
    for (int k = 1; k <= F.max_dim; ++k)
      for (const auto& s : F.simplices[k])
        for (size_t drop = 0; drop < s.vertices.size(); ++drop) {
          std::vector<int> facet;
          for (size_t i = 0; i < s.vertices.size(); ++i)
            if (i != drop) facet.push_back(s.vertices[i]);
          if (subset_weight(nu, X, facet) > s.value) {
            detail = "facet heavier than its simplex";
            return false;
          }
        }
  }
  return true;
}

SVec boundary_twice(const ChainComplex& cc, int k, int j, const PrimeField& f) {
  SVec once = cc.boundary_at(k)[j];
  SVec acc;
  for (auto [row, coef] : once) acc = sv_axpy(acc, coef, cc.boundary_at(k - 1)[row], f);
  return sv_reduce_mod(acc, f);
}

bool boundary_squares(Rng& rng, std::string& detail) {
  for (int trial = 0; trial < 10; ++trial) {
    FiniteMetricSpace X = random_space(rng, 3 + rng.uniform_int(3));
    ChainComplex cc;
    if (trial % 2) {
      cc = chain_of_tuples(build_tuple_complex(X, lp_norm(1), LeftInterval::at_most(2.0), 3));
    } else {
      FilteredComplex F = build_vr_filtration(X, lp_norm(2), 3);
      cc = chain_of_simplicial(slice_at(F, LeftInterval::at_most(1.5)));
    }
    for (int p : {2, 3}) {
      PrimeField f(p);
      for (int k = 2; k < cc.degrees(); ++k)
        for (int j = 0; j < cc.dim_at(k); ++j)
          if (!boundary_twice(cc, k, j, f).empty()) {
            detail = "boundary of a boundary survives mod " + std::to_string(p);
            return false;
          }
    }
  }
  return true;
}

bool sandwich(Rng& rng, std::string& detail) {
  for (int trial = 0; trial < 10; ++trial) {
    FiniteMetricSpace X = random_space(rng, 5);
    NormDescriptor nu = trial % 2 ? lp_norm(2) : lp_norm(1.5);
    double r = trial % 3 ? 1.3 : 0.7;
    SandwichReport rep = sandwich_check(X, nu, r, 2);
    if (!rep.ok()) {
      detail = rep.failed_part;
      return false;
    }
  }
  return true;
}

bool nerve_examples(std::string& detail) {
  // path on four vertices covered by two overlapping pieces
  SimplicialComplex path = SimplicialComplex::from_maximal(4, {{0, 1}, {1, 2}, {2, 3}});
  SimplicialComplex nerve = nerve_complex(path, {{0, 1, 2}, {2, 3}});
  ChainComplex cp = chain_of_simplicial(path), cn = chain_of_simplicial(nerve);
  if (betti_of_chain(cp, 0, 2) != betti_of_chain(cn, 0, 2) ||
      betti_of_chain(cp, 1, 2) != betti_of_chain(cn, 1, 2)) {
    detail = "path cover nerve has different homology";
    return false;
  }
  // triangle boundary covered by three arcs, nerve is the hollow triangle
  SimplicialComplex tri = SimplicialComplex::from_maximal(6, {{0, 1}, {1, 2}, {2, 3}, {3, 4},
                                                              {4, 5}, {5, 0}});
  SimplicialComplex tn = nerve_complex(tri, {{0, 1, 2}, {2, 3, 4}, {4, 5, 0}});
  ChainComplex ct = chain_of_simplicial(tri), ctn = chain_of_simplicial(tn);
  for (int k : {0, 1})
    if (betti_of_chain(ct, k, 2) != betti_of_chain(ctn, k, 2)) {
      detail = "circle cover nerve has different homology";
      return false;
    }
  return true;
}

bool ss_bridge(Rng& rng, std::string& detail) {
  for (int trial = 0; trial < 10; ++trial) {
    int m = 4 + rng.uniform_int(3);
    std::vector<std::vector<int>> maximal;
    for (int s = 0; s < 3; ++s) {
      std::vector<int> face;
      int len = 2 + rng.uniform_int(3);
      for (int i = 0; i < len; ++i) face.push_back(rng.uniform_int(m));
      maximal.push_back(face);
    }
    SimplicialComplex K = SimplicialComplex::from_maximal(m, maximal);
    TupleChainComplex T = ss_of_complex(K, 3);
    ChainComplex cc = chain_of_simplicial(K);
    for (int k : {0, 1, 2})
      if (betti(T, k, 2) != betti_of_chain(cc, k, 2)) {
        detail = "tuple model disagrees with simplicial homology";
        return false;
      }
  }
  SimplicialComplex full = SimplicialComplex::from_maximal(4, {{0, 1, 2, 3}});
  TupleChainComplex T = ss_of_complex(full, 3);
  for (int n = 0; n <= 3; ++n) {
    int expect = 4;
    for (int i = 0; i < n; ++i) expect *= 3;
    if (T.degree_size(n) != expect) {
      detail = "tuple count on the full simplex is off";
      return false;
    }
  }
  return true;
}

bool quotient_invariance(Rng& rng, std::string& detail) {
  for (int trial = 0; trial < 10; ++trial) {
    FiniteMetricSpace X = random_pseudometric(rng, 4 + rng.uniform_int(3), 2 + rng.uniform_int(3));
    KolmogorovResult q = kolmogorov_quotient(X);
    double r = 0.4 + 0.8 * rng.uniform();
    TupleChainComplex CX = build_tuple_complex(X, lp_norm(1), LeftInterval::at_most(r), 2);
    TupleChainComplex CQ = build_tuple_complex(q.space, lp_norm(1), LeftInterval::at_most(r), 2);
    for (int k : {0, 1})
      if (betti(CX, k, 2) != betti(CQ, k, 2)) {
        detail = "homology moved under the zero-distance quotient";
        return false;
      }
  }
  return true;
}

bool magnitude_pinned(std::string& detail) {
  DistanceMatrix two(2);
  two.set(0, 1, 1.0);
  two.set(1, 0, 1.0);
  FiniteMetricSpace X = validate_metric(two, false);
  if (magnitude_homology(X, 1.0, MagnitudeVariant::graded, 1, 2).rank != 2 ||
      magnitude_homology(X, 1.0, MagnitudeVariant::at_most, 1, 2).rank != 1 ||
      magnitude_homology(X, 1.0, MagnitudeVariant::strict_below, 1, 2).rank != 0) {
    detail = "two-point ranks at the critical radius are off";
    return false;
  }
  DistanceMatrix far(2);
  far.set(0, 1, 1.25);
  far.set(1, 0, 1.25);
  FiniteMetricSpace Y = validate_metric(far, false);
  if (magnitude_homology(Y, 1.0, MagnitudeVariant::graded, 1, 2).rank != 0 ||
      magnitude_homology(Y, 1.0, MagnitudeVariant::at_most, 1, 2).rank != 0) {
    detail = "stretched two-point space should be silent at radius 1";
    return false;
  }
  return true;
}

bool les_family(Rng& rng, std::string& detail) {
  for (int trial = 0; trial < 5; ++trial) {
    FiniteMetricSpace X = random_space(rng, 3 + rng.uniform_int(2));
    LesSweep sweep = les_sweep(X, 1, 2);
    if (!sweep.all_exact) {
      detail = "sweep found an inexact radius";
      return false;
    }
    if (!sweep.entries.empty()) {
      double r = sweep.entries[sweep.entries.size() / 2].r;
      LesReport rep = les_magnitude_check(X, r, 1, 2);
      if (!rep.exact) {
        detail = "direct check failed at a realized radius";
        return false;
      }
    }
  }
  return true;
}

bool mayer_vietoris(Rng& rng, std::string& detail) {
  std::vector<std::vector<double>> rows(4, std::vector<double>(4, 0.0));
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) rows[i][j] = std::fabs(i - j);
  FiniteMetricSpace line = validate_metric(DistanceMatrix::from_rows(rows), false);
  MvReport rep = mayer_vietoris_check(line, {0, 1, 2}, {1, 2, 3}, lp_norm(1),
                                      LeftInterval::at_most(1.2), 1, 2);
  if (!rep.hypothesis_holds) {
    detail = "cover criterion unexpectedly failed on the collinear example";
    return false;
  }
  if (!rep.all_exact) {
    detail = "collinear example is not exact";
    return false;
  }
  for (int trial = 0; trial < 3; ++trial) {
    FiniteMetricSpace X = random_space(rng, 5);
    MvReport r2 = mayer_vietoris_check(X, {0, 1, 2, 3}, {2, 3, 4}, lp_norm(1),
                                       LeftInterval::at_most(0.6), 1, 2);
    if (r2.hypothesis_holds && !r2.all_exact) {
      detail = "random cover satisfied the criterion but broke exactness";
      return false;
    }
  }
  return true;
}

double map_excess(const FiniteMetricSpace& X, const std::vector<int>& f,
                  const std::vector<int>& g) {
  double b = 0.0;
  for (int x = 0; x < X.size(); ++x) {
    b = std::max(b, X.d(f[x], g[x]));
    for (int y = x + 1; y < X.size(); ++y) {
      b = std::max(b, X.d(f[x], f[y]) - X.d(x, y));
      b = std::max(b, X.d(g[x], g[y]) - X.d(x, y));
    }
  }
  return b;
}

bool prism_identity(Rng& rng, std::string& detail) {
  const double ps[] = {1.0, 2.0, infty};
  for (int trial = 0; trial < 10; ++trial) {
    FiniteMetricSpace X = random_space(rng, 3 + rng.uniform_int(3));
    NormDescriptor nu = lp_norm(ps[trial % 3]);
    std::vector<int> f(X.size()), g(X.size());
    for (int i = 0; i < X.size(); ++i) {
      f[i] = rng.uniform_int(X.size());
      g[i] = rng.uniform_int(X.size());
    }
    double r0 = 0.8 + rng.uniform();
    LeftInterval src_iv = LeftInterval::at_most(r0);
    double pad = 2.0 * map_excess(X, f, g) * norm_constant(nu, 4);
    TupleChainComplex src = build_tuple_complex(X, nu, src_iv, 2);
    TupleChainComplex tgt = build_tuple_complex(X, nu, src_iv.scaled_shifted(1.0, pad), 3);
    HomotopyReport rep = chain_homotopy_check(src, tgt, f, g, trial % 2 ? 3 : 2);
    if (!rep.ok) {
      detail = "prism identity failed in degree " + std::to_string(rep.degree);
      return false;
    }
  }
  return true;
}

bool circle_grid(std::string& detail) {
  for (double p : {1.0, 2.0, infty}) {
    double grid = t_grid_search(p, 300).value;
    if (std::fabs(grid - threshold_formula(p)) > 1e-2) {
      detail = "grid minimum strays from the closed form";
      return false;
    }
  }
  return true;
}

bool circle_persistence(std::string& detail) {
  for (double p : {1.0, infty}) {
    CircleReport rep = circle_experiment(p, 24, 2);
    if (!rep.pass) {
      detail = "death of the dominant degree-1 bar misses the formula";
      return false;
    }
  }
  return true;
}

bool io_round_trip(std::string& detail) {
  std::istringstream in("a,b,c\n0,1,2\n1,0,1.5\n2,1.5,0\n");
  FiniteMetricSpace X = parse_space_csv(in, false, "selftest");
  if (X.size() != 3 || X.labels.size() != 3 || X.labels[2] != "c" || X.d(1, 2) != 1.5) {
    detail = "csv metric parse";
    return false;
  }
  if (double_token(infty) != "inf" || double_token(0.5) != "0.5") {
    detail = "numeric token form";
    return false;
  }
  Barcode bc;
  bc.bars.push_back({0, 0.0, infty});
  bc.bars.push_back({1, 0.25, 0.75});
  std::string tsv = barcode_tsv(bc);
  if (tsv.find("inf") == std::string::npos || tsv.find("0.75") == std::string::npos) {
    detail = "barcode table misses a bar";
    return false;
  }
  return true;
}

}  // namespace

bool selftest_run(std::ostream& out, uint64_t seed, int threads) {
  (void)threads;
  Report rep{out};
  std::string detail;
  auto group = [&](const char* name, auto&& fn) {
    detail.clear();
    bool ok = false;
    try {
      ok = fn();
    } catch (const std::exception& e) {
      detail = e.what();
    }
    rep.line(name, ok, detail);
  };

  Rng r1(mix_seed(seed, 1)), r2(mix_seed(seed, 2)), r3(mix_seed(seed, 3));
  Rng r4(mix_seed(seed, 4)), r5(mix_seed(seed, 5)), r6(mix_seed(seed, 6));
  Rng r7(mix_seed(seed, 7)), r8(mix_seed(seed, 8)), r9(mix_seed(seed, 9));
  Rng r10(mix_seed(seed, 10)), r11(mix_seed(seed, 11));

  group("matrix norm axioms", [&] { return norm_axioms(r1, detail); });
  group("tuple weight dual route", [&] { return weight_dual_route(r2, detail); });
  group("greedy radii agreement", [&] { return greedy_radii(r3, detail); });
  group("filtration face order", [&] { return face_order(r4, detail); });
  group("boundary squares to zero", [&] { return boundary_squares(r5, detail); });
  group("inclusion sandwich", [&] { return sandwich(r6, detail); });
  group("nerve covers", [&] { return nerve_examples(detail); });
  group("simplicial set bridge", [&] { return ss_bridge(r7, detail); });
  group("zero distance quotient", [&] { return quotient_invariance(r8, detail); });
  group("stability bound", [&] {
    return stability_campaign(mix_seed(seed, 12), 10, {1.0, infty}, {0, 1}, 2).all_pass;
  });
  group("magnitude pinned ranks", [&] { return magnitude_pinned(detail); });
  group("long exact sequence", [&] { return les_family(r9, detail); });
  group("mayer vietoris", [&] { return mayer_vietoris(r10, detail); });
  group("prism homotopy", [&] { return prism_identity(r11, detail); });
  group("circle grid vs formula", [&] { return circle_grid(detail); });
  group("circle persistence", [&] { return circle_persistence(detail); });
  group("io round trip", [&] { return io_round_trip(detail); });

  out << (rep.all ? "selftest: all families held\n" : "selftest: FAILURES above\n");
  return rep.all;
}

}  // namespace lprips
