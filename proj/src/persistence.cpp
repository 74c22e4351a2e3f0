#include "lprips/persistence.hpp"

#include <algorithm>
#include <numeric>
#include <unordered_map>

#include "lprips/chain.hpp"

namespace lprips {

ReducedPairs reduce_filtration(const FiltrationCells& cells, int p) {
  const PrimeField f(p);
  const int n = static_cast<int>(cells.size());
  int top = 0;
  for (int j = 0; j < n; ++j) {
    top = std::max(top, cells.degree[j]);
    double fv = -infty;
    for (const auto& [i, c] : cells.boundary[j]) {
      (void)c;
      if (i >= j)
        throw input_error("filtration is not monotone: a face does not precede its coface");
      fv = std::max(fv, cells.value[i]);
    }
    if (!cells.boundary[j].empty() && fv > cells.value[j])
      throw input_error("filtration is not monotone: a face enters after its coface");
  }

  ReducedPairs out;
  std::vector<char> cleared(n, 0);
  std::vector<char> zeroed(n, 0);
  std::unordered_map<int, SparseVec> by_pivot;  // pivot cell -> reduced column
  by_pivot.reserve(n);

  for (int d = top; d >= 1; --d) {
    for (int j = 0; j < n; ++j) {
      if (cells.degree[j] != d || cleared[j]) continue;
      SparseVec col = sv_reduce_mod(cells.boundary[j], f);
      while (!col.empty()) {
        const auto it = by_pivot.find(col.back().first);
        if (it == by_pivot.end()) break;
        col = sv_axpy(col, f.neg(col.back().second), it->second, f);
      }
      if (col.empty()) {
        zeroed[j] = 1;
        continue;
      }
      const int piv = col.back().first;
      const int inv = f.inv(col.back().second);
      if (inv != 1) col = sv_scale(col, inv, f);
      by_pivot.emplace(piv, std::move(col));
      out.pairs.emplace_back(piv, j);
      cleared[piv] = 1;
    }
  }
  for (int j = 0; j < n; ++j)
    if (!cleared[j] && (cells.degree[j] == 0 || zeroed[j])) out.essential.push_back(j);
  return out;
}

int Barcode::betti_at(int dim, double r, bool strict) const {
  int count = 0;
  for (const Bar& b : bars) {
    if (b.dim != dim) continue;
    if (strict ? (b.birth < r && r <= b.death) : (b.birth <= r && r < b.death)) ++count;
  }
  return count;
}

int Barcode::max_dim() const {
  int m = -1;
  for (const Bar& b : bars) m = std::max(m, b.dim);
  return m;
}

Barcode bars_from_pairs(const FiltrationCells& cells, const ReducedPairs& red) {
  Barcode bc;
  for (const auto& [i, j] : red.pairs)
    if (cells.value[i] < cells.value[j])
      bc.bars.push_back({cells.degree[i], cells.value[i], cells.value[j]});
  for (int i : red.essential) bc.bars.push_back({cells.degree[i], cells.value[i], infty});
  std::sort(bc.bars.begin(), bc.bars.end(), [](const Bar& a, const Bar& b) {
    if (a.dim != b.dim) return a.dim < b.dim;
    if (a.birth != b.birth) return a.birth < b.birth;
    return a.death < b.death;
  });
  return bc;
}

namespace {

struct SimplexRef {
  int dim;
  int idx;
  double value;
  const std::vector<int>* vertices;
};

}  // namespace

Barcode persistence(const FilteredComplex& F, int p) {
  std::vector<SimplexRef> order;
  order.reserve(F.total_cells());
  for (int k = 0; k <= F.max_dim; ++k)
    for (size_t i = 0; i < F.simplices[k].size(); ++i)
      order.push_back({k, static_cast<int>(i), F.simplices[k][i].value, &F.simplices[k][i].vertices});
  std::stable_sort(order.begin(), order.end(), [](const SimplexRef& a, const SimplexRef& b) {
    if (a.value != b.value) return a.value < b.value;
    if (a.dim != b.dim) return a.dim < b.dim;
    return *a.vertices < *b.vertices;
  });

  FiltrationCells cells;
  const int n = static_cast<int>(order.size());
  cells.value.resize(n);
  cells.degree.resize(n);
  cells.boundary.resize(n);

  // cell id lookup by vertex set, per dimension
  struct VecHash {
    size_t operator()(const std::vector<int>& t) const {
      size_t h = 1469598103934665603ULL;
      for (int v : t) {
        h ^= static_cast<size_t>(v) + 0x9e3779b9;
        h *= 1099511628211ULL;
      }
      return h;
    }
  };
  std::vector<std::unordered_map<std::vector<int>, int, VecHash>> ids(F.max_dim + 1);
  for (int c = 0; c < n; ++c) ids[order[c].dim].emplace(*order[c].vertices, c);

  for (int c = 0; c < n; ++c) {
    cells.value[c] = order[c].value;
    cells.degree[c] = order[c].dim;
    const auto& vs = *order[c].vertices;
    if (order[c].dim == 0) continue;
    SVec col;
    std::vector<int> face;
    for (int i = 0; i <= order[c].dim; ++i) {
      face.assign(vs.begin(), vs.end());
      face.erase(face.begin() + i);
      const auto it = ids[order[c].dim - 1].find(face);
      if (it == ids[order[c].dim - 1].end())
        throw input_error("filtration is missing a face of one of its simplices");
      col.emplace_back(it->second, (i % 2 == 0) ? 1 : -1);
    }
    std::sort(col.begin(), col.end());
    cells.boundary[c] = std::move(col);
  }

  return bars_from_pairs(cells, reduce_filtration(cells, p));
}

FiltrationCells tuple_filtration_cells(const TupleChainComplex& C) {
  struct Ref {
    double w;
    int deg;
    int idx;
    const std::vector<int>* t;
  };
  std::vector<Ref> order;
  order.reserve(C.total_cells());
  for (int k = 0; k <= C.max_deg; ++k)
    for (size_t i = 0; i < C.basis[k].size(); ++i)
      order.push_back({C.weights[k][i], k, static_cast<int>(i), &C.basis[k][i]});
  std::stable_sort(order.begin(), order.end(), [](const Ref& a, const Ref& b) {
    if (a.w != b.w) return a.w < b.w;
    if (a.deg != b.deg) return a.deg < b.deg;
    return *a.t < *b.t;
  });

  const ChainComplex cc = chain_of_tuples(C);

  // position of each (degree, index) in the sorted order
  std::vector<std::vector<int>> pos(C.max_deg + 1);
  for (int k = 0; k <= C.max_deg; ++k) pos[k].assign(C.basis[k].size(), -1);
  for (size_t c = 0; c < order.size(); ++c) pos[order[c].deg][order[c].idx] = static_cast<int>(c);

  FiltrationCells cells;
  const int n = static_cast<int>(order.size());
  cells.value.resize(n);
  cells.degree.resize(n);
  cells.boundary.resize(n);
  for (int c = 0; c < n; ++c) {
    cells.value[c] = order[c].w;
    cells.degree[c] = order[c].deg;
    if (order[c].deg == 0) continue;
    SVec col;
    for (const auto& [i, coef] : cc.bnd[order[c].deg][order[c].idx])
      col.emplace_back(pos[order[c].deg - 1][i], coef);
    std::sort(col.begin(), col.end());
    cells.boundary[c] = std::move(col);
  }
  return cells;
}

}  // namespace lprips
