#include "lprips/homology.hpp"

#include <map>
#include <sstream>
#include <unordered_map>

namespace lprips {

namespace {

void check_tuple_degree(const TupleChainComplex& C, int degree) {
  if (degree < 0) throw input_error("homology degree must be nonnegative");
  if (degree >= C.max_deg)
    throw input_error("degree " + std::to_string(degree) +
                      " needs the tuple complex built through degree " +
                      std::to_string(degree + 1));
}

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

std::string tuple_str(const std::vector<int>& t) {
  std::ostringstream os;
  os << "(";
  for (size_t i = 0; i < t.size(); ++i) os << (i ? "," : "") << t[i];
  os << ")";
  return os.str();
}

}  // namespace

int betti(const SimplicialComplex& K, int degree, int p) {
  if (degree < 0) throw input_error("homology degree must be nonnegative");
  return betti_of_chain(chain_of_simplicial(K), degree, p);
}

int betti(const TupleChainComplex& C, int degree, int p) {
  check_tuple_degree(C, degree);
  return betti_of_chain(chain_of_tuples(C), degree, p);
}

namespace {

template <class Complex>
InducedMap induced_map_impl(const ChainComplex& src_cc, const ChainComplex& tgt_cc,
                            const ChainMap& map, int degree, int p) {
  const PrimeField f(p);
  InducedMap out;
  out.degree = degree;
  out.p = p;
  const HomologyBasis src_h(src_cc, degree, p);
  const HomologyBasis tgt_h(tgt_cc, degree, p);
  out.src_rank = src_h.rank();
  out.tgt_rank = tgt_h.rank();
  out.matrix = homology_matrix(map, degree, src_h, tgt_h, f);
  out.rank = matrix_rank(out.matrix, f);
  return out;
}

}  // namespace

InducedMap induced_map(const SimplicialComplex& src, const SimplicialComplex& tgt,
                       const std::vector<int>& vertex_map, int degree, int p) {
  if (degree < 0) throw input_error("homology degree must be nonnegative");
  const ChainMap map = simplicial_chain_map(src, tgt, vertex_map, "induced map");
  return induced_map_impl<SimplicialComplex>(chain_of_simplicial(src), chain_of_simplicial(tgt),
                                             map, degree, p);
}

InducedMap induced_map(const TupleChainComplex& src, const TupleChainComplex& tgt,
                       const std::vector<int>& vertex_map, int degree, int p) {
  check_tuple_degree(src, degree);
  check_tuple_degree(tgt, degree);
  const ChainMap map = tuple_chain_map(src, tgt, vertex_map, "induced map");
  return induced_map_impl<TupleChainComplex>(chain_of_tuples(src), chain_of_tuples(tgt), map,
                                             degree, p);
}

HomotopyReport chain_homotopy_check(const TupleChainComplex& src, const TupleChainComplex& tgt,
                                    const std::vector<int>& f, const std::vector<int>& g, int p) {
  const int K = src.max_deg;
  if (tgt.max_deg < K + 1)
    throw input_error("homotopy check needs the target built one degree above the source");
  const PrimeField field(p);
  const ChainComplex src_cc = chain_of_tuples(src);
  const ChainComplex tgt_cc = chain_of_tuples(tgt);
  const ChainMap fm = tuple_chain_map(src, tgt, f, "homotopy lower map");
  const ChainMap gm = tuple_chain_map(src, tgt, g, "homotopy upper map");

  // prism columns: degree k source tuples to degree k+1 target tuples
  ChainMap prism;
  prism.cols.resize(K + 1);
  for (int k = 0; k <= K; ++k) {
    std::unordered_map<std::vector<int>, int, TupleHash> idx;
    idx.reserve(tgt.basis[k + 1].size() * 2);
    for (size_t i = 0; i < tgt.basis[k + 1].size(); ++i)
      idx.emplace(tgt.basis[k + 1][i], static_cast<int>(i));
    prism.cols[k].reserve(src.basis[k].size());
    std::vector<int> h(k + 2);
    for (const auto& t : src.basis[k]) {
      std::map<int, int> acc;
      for (int cut = 0; cut <= k; ++cut) {
        for (int a = 0; a <= cut; ++a) h[a] = f[t[a]];
        for (int a = cut; a <= k; ++a) h[a + 1] = g[t[a]];
        bool degenerate = false;
        for (int a = 1; a <= k + 1; ++a)
          if (h[a] == h[a - 1]) {
            degenerate = true;
            break;
          }
        if (degenerate) continue;
        const auto it = idx.find(h);
        if (it == idx.end())
          throw input_error("prism tuple " + tuple_str(h) + " is not in the target complex");
        acc[it->second] += (cut % 2 == 0) ? 1 : -1;
      }
      SVec col;
      for (const auto& [i, c] : acc)
        if (c) col.emplace_back(i, c);
      prism.cols[k].push_back(std::move(col));
    }
  }

  HomotopyReport rep;
  for (int k = 0; k <= K; ++k) {
    for (size_t j = 0; j < src.basis[k].size(); ++j) {
      const SVec pj = prism.cols[k][j];
      std::map<int, int> acc;
      for (const auto& [i, c] : pj)
        for (const auto& [r, m] : tgt_cc.bnd[k + 1][i]) acc[r] += c * m;
      if (k >= 1) {
        const SVec lower = prism.apply(k - 1, src_cc.bnd[k][j]);
        for (const auto& [i, c] : lower) acc[i] += c;
      }
      const SVec fj = fm.cols[k][j];
      const SVec gj = gm.cols[k][j];
      for (const auto& [i, c] : gj) acc[i] -= c;
      for (const auto& [i, c] : fj) acc[i] += c;
      bool zero = true;
      for (const auto& [i, c] : acc)
        if (field.reduce(c) != 0) {
          zero = false;
          break;
        }
      if (!zero) {
        rep.ok = false;
        rep.degree = k;
        rep.witness = src.basis[k][j];
        rep.detail = "prism identity fails on " + tuple_str(rep.witness);
        return rep;
      }
    }
  }
  return rep;
}

}  // namespace lprips
