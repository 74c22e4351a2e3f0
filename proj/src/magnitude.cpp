#include "lprips/magnitude.hpp"

#include <algorithm>
#include <set>

namespace lprips {

MagnitudeVariant magnitude_variant_from_string(const std::string& s) {
  if (s == "strict") return MagnitudeVariant::strict_below;
  if (s == "nonstrict") return MagnitudeVariant::at_most;
  if (s == "graded") return MagnitudeVariant::graded;
  throw input_error("unknown magnitude variant '" + s + "' (strict, nonstrict, graded)");
}

std::string to_string(MagnitudeVariant v) {
  switch (v) {
    case MagnitudeVariant::strict_below: return "strict";
    case MagnitudeVariant::at_most: return "nonstrict";
    default: return "graded";
  }
}

namespace {

// the complex at r+tol together with the strict/equal classification
struct GradedPieces {
  TupleChainComplex C;
  ChainComplex full;
  std::vector<std::vector<char>> less;   // weight at most r - tol
  std::vector<std::vector<char>> equal;  // weight within tol of r
};

GradedPieces graded_pieces(const FiniteMetricSpace& X, double r, int top_deg) {
  GradedPieces g;
  g.C = build_tuple_complex(X, lp_norm(1.0), LeftInterval::at_most(r + kGradeTol), top_deg);
  g.full = chain_of_tuples(g.C);
  g.less.resize(top_deg + 1);
  g.equal.resize(top_deg + 1);
  for (int k = 0; k <= top_deg; ++k) {
    g.less[k].resize(g.C.basis[k].size());
    g.equal[k].resize(g.C.basis[k].size());
    for (size_t i = 0; i < g.C.basis[k].size(); ++i) {
      const bool is_less = g.C.weights[k][i] <= r - kGradeTol;
      g.less[k][i] = is_less;
      g.equal[k][i] = !is_less;
    }
  }
  return g;
}

struct MaskedChain {
  ChainComplex cc;
  std::vector<std::vector<int>> from_full;  // full index -> masked index or -1
};

// subcomplex (drop_outside false: outside faces must not occur) or relative
// complex (drop_outside true: entries to outside faces are discarded)
MaskedChain mask_chain(const ChainComplex& full, const std::vector<std::vector<char>>& keep,
                       bool drop_outside) {
  MaskedChain m;
  const int degs = full.degrees();
  m.cc.dims.resize(degs);
  m.cc.bnd.resize(degs);
  m.from_full.resize(degs);
  for (int k = 0; k < degs; ++k) {
    m.from_full[k].assign(full.dims[k], -1);
    int next = 0;
    for (int i = 0; i < full.dims[k]; ++i)
      if (keep[k][i]) m.from_full[k][i] = next++;
    m.cc.dims[k] = next;
  }
  for (int k = 1; k < degs; ++k) {
    m.cc.bnd[k].reserve(m.cc.dims[k]);
    for (int i = 0; i < full.dims[k]; ++i) {
      if (!keep[k][i]) continue;
      SVec col;
      for (const auto& [face, c] : full.bnd[k][i]) {
        const int fi = m.from_full[k - 1][face];
        if (fi < 0) {
          if (drop_outside) continue;
          throw std::logic_error("masked complex is missing a face");
        }
        col.emplace_back(fi, c);
      }
      m.cc.bnd[k].push_back(std::move(col));
    }
  }
  return m;
}

}  // namespace

MagnitudeResult magnitude_homology(const FiniteMetricSpace& X, double r, MagnitudeVariant variant,
                                   int degree, int p) {
  if (degree < 0) throw input_error("homology degree must be nonnegative");
  MagnitudeResult out;
  out.r = r;
  out.degree = degree;
  out.p = p;
  out.variant = variant;
  const GradedPieces g = graded_pieces(X, r, degree + 1);
  switch (variant) {
    case MagnitudeVariant::strict_below:
      out.rank = betti_of_chain(mask_chain(g.full, g.less, false).cc, degree, p);
      break;
    case MagnitudeVariant::at_most:
      out.rank = betti_of_chain(g.full, degree, p);
      break;
    case MagnitudeVariant::graded:
      out.rank = betti_of_chain(mask_chain(g.full, g.equal, true).cc, degree, p);
      break;
  }
  return out;
}

LesReport les_magnitude_check(const FiniteMetricSpace& X, double r, int n, int p) {
  if (n < 0) throw input_error("homology degree must be nonnegative");
  const PrimeField f(p);
  LesReport rep;
  rep.r = r;
  rep.degree = n;
  rep.p = p;

  const GradedPieces g = graded_pieces(X, r, n + 1);
  const MaskedChain strict = mask_chain(g.full, g.less, false);
  const MaskedChain graded = mask_chain(g.full, g.equal, true);

  const HomologyBasis h_strict(strict.cc, n, p);
  const HomologyBasis h_full(g.full, n, p);
  const HomologyBasis h_graded(graded.cc, n, p);
  rep.rank_strict = h_strict.rank();
  rep.rank_nonstrict = h_full.rank();
  rep.rank_graded = h_graded.rank();

  // inclusion: masked index back to full index
  std::vector<int> to_full(strict.cc.dims[n], -1);
  for (int i = 0; i < g.full.dims[n]; ++i)
    if (strict.from_full[n][i] >= 0) to_full[strict.from_full[n][i]] = i;
  ChainMap incl;
  incl.cols.resize(n + 1);
  incl.cols[n].reserve(to_full.size());
  for (int j = 0; j < strict.cc.dims[n]; ++j) incl.cols[n].push_back({{to_full[j], 1}});

  ChainMap quot;
  quot.cols.resize(n + 1);
  quot.cols[n].reserve(g.full.dims[n]);
  for (int i = 0; i < g.full.dims[n]; ++i) {
    const int qi = graded.from_full[n][i];
    if (qi < 0)
      quot.cols[n].push_back({});
    else
      quot.cols[n].push_back({{qi, 1}});
  }

  const auto mi = homology_matrix(incl, n, h_strict, h_full, f);
  const auto mq = homology_matrix(quot, n, h_full, h_graded, f);
  rep.rank_incl = matrix_rank(mi, f);
  rep.rank_quot = matrix_rank(mq, f);

  rep.composite_zero = true;
  for (int j = 0; j < rep.rank_strict && rep.composite_zero; ++j)
    for (int i = 0; i < rep.rank_graded; ++i) {
      long long s = 0;
      for (int t = 0; t < rep.rank_nonstrict; ++t)
        s += static_cast<long long>(mq[i][t]) * mi[t][j];
      if (f.reduce(s) != 0) {
        rep.composite_zero = false;
        break;
      }
    }
  rep.exact = rep.composite_zero && (rep.rank_incl + rep.rank_quot == rep.rank_nonstrict);
  return rep;
}

LesSweep les_sweep(const FiniteMetricSpace& X, int n, int p) {
  if (n < 1) throw input_error("the sweep needs degree at least 1");
  LesSweep sweep;
  sweep.degree = n;
  sweep.p = p;

  const TupleChainComplex C =
      build_tuple_complex(X, lp_norm(1.0), LeftInterval::all(), n + 1);
  const FiltrationCells cells = tuple_filtration_cells(C);
  const ReducedPairs red = reduce_filtration(cells, p);
  const int ncells = static_cast<int>(cells.size());

  // cluster the realized weights, then classify every cell once
  std::vector<double> values(cells.value);
  std::sort(values.begin(), values.end());
  std::vector<double> rep_value;
  for (double v : values)
    if (rep_value.empty() || v > rep_value.back() + kGradeTol) rep_value.push_back(v);
  auto cluster_of = [&rep_value](double v) {
    auto it = std::upper_bound(rep_value.begin(), rep_value.end(), v);
    return static_cast<int>(it - rep_value.begin()) - 1;
  };
  std::vector<int> cell_cluster(ncells);
  for (int i = 0; i < ncells; ++i) cell_cluster[i] = cluster_of(cells.value[i]);

  const int nclusters = static_cast<int>(rep_value.size());

  // per cluster c: counts at the threshold "weight class <= c"
  std::vector<int> cells_n(nclusters, 0);  // degree-n cells in class c
  std::vector<int> rank_dn(nclusters, 0);  // pairs whose death is a degree-n cell
  for (int i = 0; i < ncells; ++i)
    if (cells.degree[i] == n) ++cells_n[cell_cluster[i]];
  for (const auto& [b, d] : red.pairs)
    if (cells.degree[d] == n) ++rank_dn[cell_cluster[d]];

  // bars in degree n as cluster indices
  struct ClusterBar {
    int birth;
    int death;  // nclusters for never
  };
  std::vector<ClusterBar> bars;
  for (const auto& [b, d] : red.pairs)
    if (cells.degree[b] == n) bars.push_back({cell_cluster[b], cell_cluster[d]});
  for (int i : red.essential)
    if (cells.degree[i] == n) bars.push_back({cell_cluster[i], nclusters});

  // prefix sums over clusters
  std::vector<int> cum_cells_n(nclusters + 1, 0), cum_rank_dn(nclusters + 1, 0);
  for (int c = 0; c < nclusters; ++c) {
    cum_cells_n[c + 1] = cum_cells_n[c] + cells_n[c];
    cum_rank_dn[c + 1] = cum_rank_dn[c] + rank_dn[c];
  }

  for (int c = 0; c < nclusters; ++c) {
    LesSweepEntry e;
    e.r = rep_value[c];

    int alive_le = 0, alive_less = 0, through = 0;
    for (const ClusterBar& b : bars) {
      if (b.birth <= c && b.death > c) ++alive_le;
      if (b.birth < c && b.death >= c) ++alive_less;
      if (b.birth < c && b.death > c) ++through;
    }
    e.rank_nonstrict = alive_le;
    e.rank_strict = alive_less;
    e.rank_incl = through;

    // relative boundary in degree n+1: columns and rows in class exactly c
    std::vector<int> row_of;  // degree-n cell id -> relative row
    row_of.assign(ncells, -1);
    int rows = 0;
    for (int i = 0; i < ncells; ++i)
      if (cells.degree[i] == n && cell_cluster[i] == c) row_of[i] = rows++;
    std::vector<SVec> relcols;
    for (int i = 0; i < ncells; ++i) {
      if (cells.degree[i] != n + 1 || cell_cluster[i] != c) continue;
      SVec col;
      for (const auto& [face, coef] : cells.boundary[i])
        if (row_of[face] >= 0) col.emplace_back(row_of[face], coef);
      relcols.push_back(std::move(col));
    }
    int rel_rank;
    if (p == 2)
      rel_rank = rank_mod2(rows, relcols);
    else
      rel_rank = rank_mod_p(relcols, PrimeField(p));

    const int zn_le = cum_cells_n[c + 1] - cum_rank_dn[c + 1];
    const int zn_less = cum_cells_n[c] - cum_rank_dn[c];
    e.rank_quot = (zn_le - zn_less) - rel_rank;

    // graded rank for the report: relative cycles minus relative boundaries
    std::vector<SVec> relcols_dn;
    std::vector<int> lower_row(ncells, -1);
    int lrows = 0;
    for (int i = 0; i < ncells; ++i)
      if (cells.degree[i] == n - 1 && cell_cluster[i] == c) lower_row[i] = lrows++;
    for (int i = 0; i < ncells; ++i) {
      if (cells.degree[i] != n || cell_cluster[i] != c) continue;
      SVec col;
      for (const auto& [face, coef] : cells.boundary[i])
        if (lower_row[face] >= 0) col.emplace_back(lower_row[face], coef);
      relcols_dn.push_back(std::move(col));
    }
    int rel_rank_dn;
    if (p == 2)
      rel_rank_dn = rank_mod2(lrows, relcols_dn);
    else
      rel_rank_dn = rank_mod_p(relcols_dn, PrimeField(p));
    e.rank_graded = (cum_cells_n[c + 1] - cum_cells_n[c]) - rel_rank_dn - rel_rank;

    e.exact = (e.rank_incl + e.rank_quot == e.rank_nonstrict);
    if (!e.exact) sweep.all_exact = false;
    sweep.entries.push_back(e);
  }
  return sweep;
}

MvReport mayer_vietoris_check(const FiniteMetricSpace& X, const std::vector<int>& U,
                              const std::vector<int>& V, const NormDescriptor& nu,
                              const LeftInterval& L, int n, int p) {
  if (n < 0) throw input_error("homology degree must be nonnegative");
  const PrimeField f(p);

  std::set<int> in_u(U.begin(), U.end()), in_v(V.begin(), V.end());
  for (int x = 0; x < X.size(); ++x)
    if (!in_u.count(x) && !in_v.count(x))
      throw input_error("point " + std::to_string(x) + " is in neither cover element");

  MvReport rep;
  const CoverCriterionReport crit = ellipse_cover_criterion(X, nu, L, {U, V});
  rep.hypothesis_holds = crit.holds;
  rep.hx = crit.x;
  rep.hy = crit.y;

  std::vector<int> inter;
  for (int x : U)
    if (in_v.count(x)) inter.push_back(x);
  std::sort(inter.begin(), inter.end());

  std::vector<int> su(U.begin(), U.end()), sv(V.begin(), V.end());
  std::sort(su.begin(), su.end());
  std::sort(sv.begin(), sv.end());

  const int top = n + 1;
  const TupleChainComplex cx = build_tuple_complex(X, nu, L, top);
  const TupleChainComplex cu = build_tuple_complex(subspace(X, su), nu, L, top);
  const TupleChainComplex cv = build_tuple_complex(subspace(X, sv), nu, L, top);
  const bool have_inter = !inter.empty();
  TupleChainComplex ci;
  if (have_inter) ci = build_tuple_complex(subspace(X, inter), nu, L, top);

  const ChainComplex ccx = chain_of_tuples(cx);
  const ChainComplex ccu = chain_of_tuples(cu);
  const ChainComplex ccv = chain_of_tuples(cv);
  ChainComplex cci;
  if (have_inter) cci = chain_of_tuples(ci);

  // vertex maps between the index spaces
  auto embed = [](const std::vector<int>& sub, const std::vector<int>& super) {
    std::vector<int> m(sub.size());
    for (size_t i = 0; i < sub.size(); ++i) {
      const auto it = std::lower_bound(super.begin(), super.end(), sub[i]);
      m[i] = static_cast<int>(it - super.begin());
    }
    return m;
  };
  std::vector<int> all(X.size());
  for (int i = 0; i < X.size(); ++i) all[i] = i;

  ChainMap iu, iv, ju, jv;
  if (have_inter) {
    iu = tuple_chain_map(ci, cu, embed(inter, su), "intersection into first element");
    iv = tuple_chain_map(ci, cv, embed(inter, sv), "intersection into second element");
  }
  ju = tuple_chain_map(cu, cx, su, "first element into the space");
  jv = tuple_chain_map(cv, cx, sv, "second element into the space");

  for (int k = 0; k <= n; ++k) {
    const HomologyBasis hi_opt = have_inter ? HomologyBasis(cci, k, p)
                                            : HomologyBasis(ChainComplex{}, k, p);
    const HomologyBasis hu(ccu, k, p);
    const HomologyBasis hv(ccv, k, p);
    const HomologyBasis hx(ccx, k, p);
    const int ri = hi_opt.rank(), ru = hu.rank(), rv = hv.rank(), rx = hx.rank();
    rep.betti_inter.push_back(ri);
    rep.betti_u.push_back(ru);
    rep.betti_v.push_back(rv);
    rep.betti_x.push_back(rx);

    // alpha: intersection class to (restriction into U, minus restriction into V)
    std::vector<std::vector<int>> alpha(ru + rv, std::vector<int>(ri, 0));
    if (have_inter && ri > 0) {
      const auto mu = homology_matrix(iu, k, hi_opt, hu, f);
      const auto mv = homology_matrix(iv, k, hi_opt, hv, f);
      for (int j = 0; j < ri; ++j) {
        for (int i = 0; i < ru; ++i) alpha[i][j] = mu[i][j];
        for (int i = 0; i < rv; ++i) alpha[ru + i][j] = f.neg(mv[i][j]);
      }
    }
    // beta: sum of the two pushforwards
    const auto bu = homology_matrix(ju, k, hu, hx, f);
    const auto bv = homology_matrix(jv, k, hv, hx, f);
    std::vector<std::vector<int>> beta(rx, std::vector<int>(ru + rv, 0));
    for (int i = 0; i < rx; ++i) {
      for (int j = 0; j < ru; ++j) beta[i][j] = bu[i][j];
      for (int j = 0; j < rv; ++j) beta[i][ru + j] = bv[i][j];
    }

    const int ra = matrix_rank(alpha, f);
    const int rb = matrix_rank(beta, f);
    rep.rank_alpha.push_back(ra);
    rep.rank_beta.push_back(rb);

    bool comp_zero = true;
    for (int j = 0; j < ri && comp_zero; ++j)
      for (int i = 0; i < rx; ++i) {
        long long s = 0;
        for (int t = 0; t < ru + rv; ++t)
          s += static_cast<long long>(beta[i][t]) * alpha[t][j];
        if (f.reduce(s) != 0) {
          comp_zero = false;
          break;
        }
      }
    const bool ex = comp_zero && (ra + rb == ru + rv);
    rep.composite_zero.push_back(comp_zero);
    rep.exact.push_back(ex);
    if (!ex) rep.all_exact = false;

    const int sign = (k % 2 == 0) ? 1 : -1;
    rep.euler_defect += sign * (ru + rv - ri - rx);
  }
  return rep;
}

}  // namespace lprips
