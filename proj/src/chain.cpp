#include "lprips/chain.hpp"

#include <algorithm>
#include <map>
#include <sstream>
#include <stdexcept>
#include <unordered_map>

namespace lprips {

namespace {

struct TupleHash {
  size_t operator()(const std::vector<int>& t) const {
    size_t h = 1469598103934665603ULL;
    for (int v : t) {
      h ^= static_cast<size_t>(v) + 0x9e3779b9;
      h *= 1099511628211ULL;
    }
    return h;
  }
};

using TupleIndex = std::unordered_map<std::vector<int>, int, TupleHash>;

TupleIndex index_of(const std::vector<std::vector<int>>& basis) {
  TupleIndex idx;
  idx.reserve(basis.size() * 2);
  for (size_t i = 0; i < basis.size(); ++i) idx.emplace(basis[i], static_cast<int>(i));
  return idx;
}

bool consecutive_repeat(const std::vector<int>& t) {
  for (size_t i = 1; i < t.size(); ++i)
    if (t[i] == t[i - 1]) return true;
  return false;
}

SVec strip_zeros(const std::map<int, int>& acc) {
  SVec out;
  for (const auto& [i, c] : acc)
    if (c) out.emplace_back(i, c);
  return out;
}

std::string tuple_str(const std::vector<int>& t) {
  std::ostringstream os;
  os << "(";
  for (size_t i = 0; i < t.size(); ++i) os << (i ? "," : "") << t[i];
  os << ")";
  return os.str();
}

}  // namespace

const std::vector<SVec>& ChainComplex::boundary_at(int k) const {
  static const std::vector<SVec> empty;
  if (k < 1 || k >= degrees()) return empty;
  return bnd[k];
}

ChainComplex chain_of_tuples(const TupleChainComplex& C) {
  ChainComplex cc;
  cc.dims.resize(C.max_deg + 1);
  cc.bnd.resize(C.max_deg + 1);
  for (int k = 0; k <= C.max_deg; ++k) cc.dims[k] = C.degree_size(k);
  for (int k = 1; k <= C.max_deg; ++k) {
    if (C.basis[k].empty()) continue;
    const TupleIndex faces = index_of(C.basis[k - 1]);
    auto& cols = cc.bnd[k];
    cols.reserve(C.basis[k].size());
    std::vector<int> face;
    for (const auto& t : C.basis[k]) {
      std::map<int, int> acc;
      for (size_t i = 0; i <= static_cast<size_t>(k); ++i) {
        face.assign(t.begin(), t.end());
        face.erase(face.begin() + i);
        if (consecutive_repeat(face)) continue;
        const auto it = faces.find(face);
        if (it == faces.end())
          throw std::logic_error("tuple complex is missing the face " + tuple_str(face));
        acc[it->second] += (i % 2 == 0) ? 1 : -1;
      }
      cols.push_back(strip_zeros(acc));
    }
  }
  return cc;
}

ChainComplex chain_of_simplicial(const SimplicialComplex& K) {
  ChainComplex cc;
  const int top = K.top_dim();
  cc.dims.resize(top + 1);
  cc.bnd.resize(top + 1);
  for (int k = 0; k <= top; ++k) cc.dims[k] = static_cast<int>(K.faces[k].size());
  for (int k = 1; k <= top; ++k) {
    auto& cols = cc.bnd[k];
    cols.reserve(K.faces[k].size());
    std::vector<int> face;
    for (const auto& s : K.faces[k]) {
      SVec col;
      for (int i = 0; i <= k; ++i) {
        face.assign(s.begin(), s.end());
        face.erase(face.begin() + i);
        const auto it = std::lower_bound(K.faces[k - 1].begin(), K.faces[k - 1].end(), face);
        if (it == K.faces[k - 1].end() || *it != face)
          throw std::logic_error("complex is not downward closed at " + tuple_str(face));
        col.emplace_back(static_cast<int>(it - K.faces[k - 1].begin()),
                         (i % 2 == 0) ? 1 : -1);
      }
      std::sort(col.begin(), col.end());
      cols.push_back(std::move(col));
    }
  }
  return cc;
}

int betti_of_chain(const ChainComplex& cc, int degree, int p) {
  if (degree < 0) throw input_error("homology degree must be nonnegative");
  const int dim = cc.dim_at(degree);
  if (dim == 0) return 0;
  int rank_d = 0, rank_d1 = 0;
  if (p == 2) {
    rank_d = rank_mod2(cc.dim_at(degree - 1), cc.boundary_at(degree));
    rank_d1 = rank_mod2(dim, cc.boundary_at(degree + 1));
  } else {
    const PrimeField f(p);
    rank_d = rank_mod_p(cc.boundary_at(degree), f);
    rank_d1 = rank_mod_p(cc.boundary_at(degree + 1), f);
  }
  return dim - rank_d - rank_d1;
}

HomologyBasis::HomologyBasis(const ChainComplex& cc, int degree, int p)
    : degree_(degree), f_(p), solver_(f_) {
  if (degree < 0) throw input_error("homology degree must be nonnegative");
  const int dim = cc.dim_at(degree);

  // kernel of the boundary leaving this degree, tracked through tails
  std::vector<SparseVec> kernel;
  if (degree == 0 || cc.boundary_at(degree).empty()) {
    for (int j = 0; j < dim; ++j) kernel.push_back({{j, 1}});
  } else {
    AugReducer ker(f_);
    const auto& cols = cc.boundary_at(degree);
    for (int j = 0; j < dim; ++j) {
      SparseVec head = sv_reduce_mod(cols[j], f_);
      SparseVec tail{{j, 1}};
      ker.reduce(head, tail);
      if (head.empty())
        kernel.push_back(std::move(tail));
      else
        ker.store(std::move(head), std::move(tail));
    }
  }

  for (const auto& col : cc.boundary_at(degree + 1))
    solver_.add(sv_reduce_mod(col, f_), {});
  for (auto& z : kernel) {
    SparseVec head = z, tail;
    solver_.reduce(head, tail);
    if (head.empty()) continue;
    const int slot = static_cast<int>(reps_.size());
    tail = sv_axpy(tail, 1, SparseVec{{slot, 1}}, f_);
    solver_.store(std::move(head), std::move(tail));
    reps_.push_back(std::move(z));
  }
}

std::vector<int> HomologyBasis::express(const SparseVec& cycle) const {
  SparseVec head = cycle, tail;
  solver_.reduce(head, tail);
  if (!head.empty())
    throw input_error("chain is not a cycle of the expected complex");
  std::vector<int> out(reps_.size(), 0);
  for (const auto& [i, c] : tail) out[i] = f_.neg(c);
  return out;
}

SVec ChainMap::apply(int k, const SVec& v) const {
  std::map<int, int> acc;
  if (k < 0 || k >= static_cast<int>(cols.size())) return {};
  for (const auto& [j, c] : v)
    for (const auto& [i, m] : cols[k][j]) acc[i] += c * m;
  SVec out;
  for (const auto& [i, c] : acc)
    if (c) out.emplace_back(i, c);
  return out;
}

ChainMap tuple_chain_map(const TupleChainComplex& src, const TupleChainComplex& tgt,
                         const std::vector<int>& vertex_map, const std::string& what) {
  if (static_cast<int>(vertex_map.size()) != src.n_points)
    throw input_error(what + ": vertex map size does not match the source");
  for (int v : vertex_map)
    if (v < 0 || v >= tgt.n_points)
      throw input_error(what + ": vertex map image out of range");
  ChainMap out;
  const int degs = std::min(src.max_deg, tgt.max_deg);
  out.cols.resize(degs + 1);
  for (int k = 0; k <= degs; ++k) {
    const TupleIndex idx = index_of(tgt.basis[k]);
    out.cols[k].reserve(src.basis[k].size());
    for (const auto& t : src.basis[k]) {
      std::vector<int> img(t.size());
      for (size_t i = 0; i < t.size(); ++i) img[i] = vertex_map[t[i]];
      if (consecutive_repeat(img)) {
        out.cols[k].push_back({});
        continue;
      }
      const auto it = idx.find(img);
      if (it == idx.end())
        throw input_error(what + ": image tuple " + tuple_str(img) +
                          " is not in the target complex");
      out.cols[k].push_back({{it->second, 1}});
    }
  }
  return out;
}

ChainMap simplicial_chain_map(const SimplicialComplex& src, const SimplicialComplex& tgt,
                              const std::vector<int>& vertex_map, const std::string& what) {
  if (static_cast<int>(vertex_map.size()) != src.n_vertices)
    throw input_error(what + ": vertex map size does not match the source");
  for (int v : vertex_map)
    if (v < 0 || v >= tgt.n_vertices)
      throw input_error(what + ": vertex map image out of range");
  ChainMap out;
  out.cols.resize(src.faces.size());
  for (int k = 0; k < static_cast<int>(src.faces.size()); ++k) {
    out.cols[k].reserve(src.faces[k].size());
    for (const auto& s : src.faces[k]) {
      std::vector<std::pair<int, int>> img;  // (vertex, original position)
      for (int i = 0; i <= k; ++i) img.emplace_back(vertex_map[s[i]], i);
      std::sort(img.begin(), img.end());
      bool collapse = false;
      for (int i = 1; i <= k; ++i)
        if (img[i].first == img[i - 1].first) collapse = true;
      if (collapse) {
        out.cols[k].push_back({});
        continue;
      }
      // sign of the sorting permutation
      int sign = 1;
      for (int i = 0; i <= k; ++i)
        for (int j = i + 1; j <= k; ++j)
          if (img[i].second > img[j].second) sign = -sign;
      std::vector<int> face(k + 1);
      for (int i = 0; i <= k; ++i) face[i] = img[i].first;
      if (k >= static_cast<int>(tgt.faces.size()) || !tgt.has_face(face))
        throw input_error(what + ": image simplex " + tuple_str(face) +
                          " is not in the target complex");
      const auto it = std::lower_bound(tgt.faces[k].begin(), tgt.faces[k].end(), face);
      out.cols[k].push_back({{static_cast<int>(it - tgt.faces[k].begin()), sign}});
    }
  }
  return out;
}

std::vector<std::vector<int>> homology_matrix(const ChainMap& map, int degree,
                                              const HomologyBasis& src, const HomologyBasis& tgt,
                                              const PrimeField& f) {
  std::vector<std::vector<int>> m(tgt.rank(), std::vector<int>(src.rank(), 0));
  for (int j = 0; j < src.rank(); ++j) {
    const SVec img = map.apply(degree, src.rep(j));
    const std::vector<int> coords = tgt.express(sv_reduce_mod(img, f));
    for (int i = 0; i < tgt.rank(); ++i) m[i][j] = coords[i];
  }
  return m;
}

int matrix_rank(const std::vector<std::vector<int>>& m, const PrimeField& f) {
  if (m.empty() || m[0].empty()) return 0;
  const int rows = static_cast<int>(m.size());
  const int cols = static_cast<int>(m[0].size());
  std::vector<int> flat;
  flat.reserve(static_cast<size_t>(rows) * cols);
  for (const auto& row : m)
    for (int v : row) flat.push_back(f.reduce(v));
  return dense_rank(std::move(flat), rows, cols, f);
}

}  // namespace lprips
