#include "lprips/complexes.hpp"

#include <algorithm>
#include <cstdlib>
#include <set>
#include <sstream>
#include <unordered_set>

namespace lprips {

namespace {

void guard_cells(uint64_t count, const char* what) {
  if (count > cell_cap()) {
    std::ostringstream os;
    os << what << " would enumerate " << count << " cells, above the cap of " << cell_cap()
       << " (raise LPRIPS_MAX_CELLS to override)";
    throw cap_error(os.str());
  }
}

uint64_t binomial(int n, int k) {
  if (k < 0 || k > n) return 0;
  unsigned __int128 out = 1;
  for (int i = 1; i <= k; ++i) {
    out = out * static_cast<unsigned>(n - k + i) / static_cast<unsigned>(i);
    if (out > UINT64_MAX) return UINT64_MAX;
  }
  return static_cast<uint64_t>(out);
}

}  // namespace

uint64_t cell_cap() {
  static const uint64_t cap = [] {
    const char* s = std::getenv("LPRIPS_MAX_CELLS");
    if (!s || !*s) return uint64_t{1000000};
    char* end = nullptr;
    const unsigned long long v = std::strtoull(s, &end, 10);
    if (end == s || *end != '\0' || v == 0)
      throw input_error("LPRIPS_MAX_CELLS must be a positive integer");
    return static_cast<uint64_t>(v);
  }();
  return cap;
}

size_t FilteredComplex::total_cells() const {
  size_t n = 0;
  for (const auto& dim : simplices) n += dim.size();
  return n;
}

FilteredComplex build_vr_filtration(const FiniteMetricSpace& X, const NormDescriptor& nu,
                                    int max_dim, int threads) {
  detail::check_descriptor(nu);
  if (max_dim < 0 || max_dim > 7)
    throw input_error("filtration dimension must be in [0, 7]");
  const int m = X.size();
  FilteredComplex F;
  F.n_points = m;
  F.norm = nu;
  F.max_dim = std::min(max_dim, m - 1);
  F.simplices.resize(F.max_dim + 1);

  for (int k = 0; k <= F.max_dim; ++k) {
    guard_cells(binomial(m, k + 1), "filtration");
    std::vector<std::vector<int>> subsets;
    std::vector<int> cur(k + 1);
    for (int i = 0; i <= k; ++i) cur[i] = i;
    while (true) {
      subsets.push_back(cur);
      int pos = k;
      while (pos >= 0 && cur[pos] == m - (k + 1 - pos)) --pos;
      if (pos < 0) break;
      ++cur[pos];
      for (int i = pos + 1; i <= k; ++i) cur[i] = cur[i - 1] + 1;
    }
    std::vector<double> values;
    if (k == 0) {
      values.assign(subsets.size(), 0.0);
    } else {
      values = batch_subset_weights(nu, X, subsets, threads);
    }
    auto& out = F.simplices[k];
    out.reserve(subsets.size());
    for (size_t i = 0; i < subsets.size(); ++i)
      out.push_back(Simplex{std::move(subsets[i]), values[i]});
    std::stable_sort(out.begin(), out.end(),
                     [](const Simplex& a, const Simplex& b) { return a.value < b.value; });
  }
  return F;
}

bool SimplicialComplex::has_face(const std::vector<int>& f) const {
  const int d = static_cast<int>(f.size()) - 1;
  if (d < 0 || d >= static_cast<int>(faces.size())) return false;
  return std::binary_search(faces[d].begin(), faces[d].end(), f);
}

size_t SimplicialComplex::total_cells() const {
  size_t n = 0;
  for (const auto& dim : faces) n += dim.size();
  return n;
}

SimplicialComplex SimplicialComplex::from_maximal(int n_vertices,
                                                  const std::vector<std::vector<int>>& maximal) {
  SimplicialComplex K;
  K.n_vertices = n_vertices;
  std::set<std::vector<int>> seen;
  int top = -1;
  for (const auto& raw : maximal) {
    std::vector<int> f = raw;
    std::sort(f.begin(), f.end());
    f.erase(std::unique(f.begin(), f.end()), f.end());
    if (f.empty()) throw input_error("empty face in complex description");
    for (int v : f)
      if (v < 0 || v >= n_vertices)
        throw input_error("face vertex " + std::to_string(v) + " out of range");
    const int sz = static_cast<int>(f.size());
    if (sz > 24) throw cap_error("faces above 24 vertices are not supported");
    for (uint32_t mask = 1; mask < (uint32_t{1} << sz); ++mask) {
      std::vector<int> sub;
      for (int b = 0; b < sz; ++b)
        if (mask & (uint32_t{1} << b)) sub.push_back(f[b]);
      if (seen.insert(sub).second) top = std::max(top, static_cast<int>(sub.size()) - 1);
    }
  }
  K.faces.resize(top + 1);
  for (const auto& f : seen) K.faces[f.size() - 1].push_back(f);
  return K;
}

SimplicialComplex slice_at(const FilteredComplex& F, const LeftInterval& L) {
  SimplicialComplex K;
  K.n_vertices = F.n_points;
  for (int k = 0; k <= F.max_dim; ++k) {
    std::vector<std::vector<int>> kept;
    for (const Simplex& s : F.simplices[k])
      if (L.contains(s.value)) kept.push_back(s.vertices);
    if (kept.empty()) break;
    std::sort(kept.begin(), kept.end());
    K.faces.push_back(std::move(kept));
  }
  return K;
}

size_t TupleChainComplex::total_cells() const {
  size_t n = 0;
  for (const auto& deg : basis) n += deg.size();
  return n;
}

TupleChainComplex build_tuple_complex(const FiniteMetricSpace& X, const NormDescriptor& nu,
                                      const LeftInterval& L, int max_deg, int threads) {
  detail::check_descriptor(nu);
  if (max_deg < 0) throw input_error("tuple degree must be nonnegative");
  const int m = X.size();
  TupleChainComplex C;
  C.n_points = m;
  C.norm = nu;
  C.interval = L;
  C.max_deg = max_deg;
  C.basis.resize(max_deg + 1);
  C.weights.resize(max_deg + 1);

  guard_cells(static_cast<uint64_t>(m), "tuple complex");
  for (int i = 0; i < m; ++i)
    if (L.contains(0.0)) {
      C.basis[0].push_back({i});
      C.weights[0].push_back(0.0);
    }

  for (int k = 1; k <= max_deg; ++k) {
    const auto& prev = C.basis[k - 1];
    if (prev.empty()) break;
    guard_cells(static_cast<uint64_t>(prev.size()) * static_cast<uint64_t>(std::max(m - 1, 0)),
                "tuple complex");
    std::vector<std::vector<int>> candidates;
    candidates.reserve(prev.size() * static_cast<size_t>(std::max(m - 1, 0)));
    for (const auto& t : prev)
      for (int q = 0; q < m; ++q) {
        if (q == t.back()) continue;
        std::vector<int> ext = t;
        ext.push_back(q);
        candidates.push_back(std::move(ext));
      }
    std::vector<double> w = batch_tuple_weights(nu, X, candidates, threads);
    for (size_t i = 0; i < candidates.size(); ++i)
      if (L.contains(w[i])) {
        C.basis[k].push_back(std::move(candidates[i]));
        C.weights[k].push_back(w[i]);
      }
  }
  return C;
}

TupleChainComplex ss_of_complex(const SimplicialComplex& K, int max_deg) {
  if (max_deg < 0) throw input_error("tuple degree must be nonnegative");
  TupleChainComplex C;
  C.n_points = K.n_vertices;
  C.norm = lp_norm(infty);
  C.interval = LeftInterval::all();
  C.max_deg = max_deg;
  C.basis.resize(max_deg + 1);
  C.weights.resize(max_deg + 1);
  if (K.faces.empty()) return C;

  const auto& verts = K.faces[0];
  std::vector<int> vertex_ids;
  vertex_ids.reserve(verts.size());
  for (const auto& v : verts) vertex_ids.push_back(v[0]);

  // supports[k][i] = sorted distinct entries of basis[k][i]
  std::vector<std::vector<int>> supports;
  for (int v : vertex_ids) {
    C.basis[0].push_back({v});
    C.weights[0].push_back(0.0);
    supports.push_back({v});
  }

  for (int k = 1; k <= max_deg; ++k) {
    guard_cells(static_cast<uint64_t>(C.basis[k - 1].size()) * vertex_ids.size(),
                "tuple complex");
    std::vector<std::vector<int>> next_supports;
    for (size_t i = 0; i < C.basis[k - 1].size(); ++i) {
      const auto& t = C.basis[k - 1][i];
      for (int q : vertex_ids) {
        if (q == t.back()) continue;
        std::vector<int> sup = supports[i];
        auto it = std::lower_bound(sup.begin(), sup.end(), q);
        if (it == sup.end() || *it != q) sup.insert(it, q);
        if (!K.has_face(sup)) continue;
        std::vector<int> ext = t;
        ext.push_back(q);
        C.basis[k].push_back(std::move(ext));
        C.weights[k].push_back(0.0);
        next_supports.push_back(std::move(sup));
      }
    }
    supports = std::move(next_supports);
    if (C.basis[k].empty()) break;
  }
  return C;
}

SimplicialComplex nerve_complex(const SimplicialComplex& K,
                                const std::vector<std::vector<int>>& cover) {
  const int nc = static_cast<int>(cover.size());
  if (nc == 0) throw input_error("cover must have at least one element");
  if (nc > 20) throw cap_error("nerve is capped at 20 cover elements");
  std::vector<std::unordered_set<int>> sets(nc);
  for (int i = 0; i < nc; ++i)
    for (int v : cover[i]) {
      if (v < 0 || v >= K.n_vertices)
        throw input_error("cover element " + std::to_string(i) + " has vertex out of range");
      sets[i].insert(v);
    }

  // every face of K must fit inside a single cover element
  for (const auto& dim : K.faces)
    for (const auto& f : dim) {
      bool covered = false;
      for (int i = 0; i < nc && !covered; ++i) {
        bool inside = true;
        for (int v : f)
          if (!sets[i].count(v)) {
            inside = false;
            break;
          }
        covered = inside;
      }
      if (!covered) {
        std::ostringstream os;
        os << "cover misses a face of the complex: {";
        for (size_t t = 0; t < f.size(); ++t) os << (t ? "," : "") << f[t];
        os << "}";
        throw input_error(os.str());
      }
    }

  // membership mask per vertex of K, then all submasks of every mask
  std::unordered_set<uint32_t> nerve_masks;
  if (!K.faces.empty()) {
    for (const auto& v : K.faces[0]) {
      uint32_t mask = 0;
      for (int i = 0; i < nc; ++i)
        if (sets[i].count(v[0])) mask |= uint32_t{1} << i;
      for (uint32_t sub = mask; sub; sub = (sub - 1) & mask) nerve_masks.insert(sub);
    }
  }

  SimplicialComplex N;
  N.n_vertices = nc;
  std::vector<std::vector<std::vector<int>>> by_dim;
  for (uint32_t mask : nerve_masks) {
    std::vector<int> face;
    for (int i = 0; i < nc; ++i)
      if (mask & (uint32_t{1} << i)) face.push_back(i);
    const int d = static_cast<int>(face.size()) - 1;
    if (d >= static_cast<int>(by_dim.size())) by_dim.resize(d + 1);
    by_dim[d].push_back(std::move(face));
  }
  for (auto& dim : by_dim) std::sort(dim.begin(), dim.end());
  N.faces = std::move(by_dim);
  return N;
}

CoverCriterionReport ellipse_cover_criterion(const FiniteMetricSpace& X,
                                             const NormDescriptor& nu, const LeftInterval& L,
                                             const std::vector<std::vector<int>>& cover) {
  std::vector<std::unordered_set<int>> sets(cover.size());
  for (size_t i = 0; i < cover.size(); ++i)
    for (int v : cover[i]) {
      if (v < 0 || v >= X.size())
        throw input_error("cover element " + std::to_string(i) + " has point out of range");
      sets[i].insert(v);
    }
  CoverCriterionReport rep;
  std::vector<int> ellipse;
  for (int x = 0; x < X.size(); ++x)
    for (int y = x; y < X.size(); ++y) {
      if (!L.contains(X.d(x, y))) continue;
      ellipse.clear();
      for (int a = 0; a < X.size(); ++a)
        if (ellipse_membership(nu, X, x, y, a, L)) ellipse.push_back(a);
      bool fits = false;
      for (const auto& s : sets) {
        bool inside = true;
        for (int a : ellipse)
          if (!s.count(a)) {
            inside = false;
            break;
          }
        if (inside) {
          fits = true;
          break;
        }
      }
      if (!fits) {
        rep.holds = false;
        rep.x = x;
        rep.y = y;
        return rep;
      }
    }
  return rep;
}

namespace {

// first tuple of small missing from big (both lex sorted), or empty
std::vector<int> first_missing(const std::vector<std::vector<int>>& small,
                               const std::vector<std::vector<int>>& big) {
  size_t j = 0;
  for (const auto& t : small) {
    while (j < big.size() && big[j] < t) ++j;
    if (j == big.size() || big[j] != t) return t;
  }
  return {};
}

}  // namespace

SandwichReport sandwich_check(const FiniteMetricSpace& X, const NormDescriptor& nu,
                              double r, int n, int threads) {
  if (n < 1) throw input_error("sandwich degree must be at least 1");
  SandwichReport rep;
  rep.constant = norm_constant(nu, n);
  const LeftInterval at = LeftInterval::at_most(r);
  const TupleChainComplex c1 = build_tuple_complex(X, lp_norm(1.0), at, n, threads);
  const TupleChainComplex cn = build_tuple_complex(X, nu, at, n, threads);
  const TupleChainComplex ci = build_tuple_complex(X, lp_norm(infty), at, n, threads);
  const TupleChainComplex si =
      build_tuple_complex(X, lp_norm(infty), LeftInterval::less_than(r / rep.constant), n, threads);
  const TupleChainComplex sn = build_tuple_complex(X, nu, LeftInterval::less_than(r), n, threads);

  for (int k = 0; k <= n; ++k) {
    rep.counts_l1.push_back(c1.degree_size(k));
    rep.counts_nu.push_back(cn.degree_size(k));
    rep.counts_linf.push_back(ci.degree_size(k));
  }
  for (int k = 0; k <= n; ++k) {
    std::vector<int> w = first_missing(c1.basis[k], cn.basis[k]);
    if (!w.empty()) {
      rep.lower_ok = false;
      rep.witness = w;
      rep.witness_degree = k;
      rep.failed_part = "exponent-1 into nu";
      return rep;
    }
    w = first_missing(cn.basis[k], ci.basis[k]);
    if (!w.empty()) {
      rep.upper_ok = false;
      rep.witness = w;
      rep.witness_degree = k;
      rep.failed_part = "nu into sup";
      return rep;
    }
    w = first_missing(si.basis[k], sn.basis[k]);
    if (!w.empty()) {
      rep.skeleton_ok = false;
      rep.witness = w;
      rep.witness_degree = k;
      rep.failed_part = "rescaled sup into nu";
      return rep;
    }
  }
  return rep;
}

}  // namespace lprips
