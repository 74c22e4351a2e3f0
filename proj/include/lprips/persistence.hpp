#pragma once

#include <vector>

#include "lprips/complexes.hpp"
#include "lprips/field.hpp"

namespace lprips {

// generic filtered chain complex handed to the reduction: cells listed in
// filtration order (faces strictly before cofaces), boundaries indexing cells
struct FiltrationCells {
  std::vector<double> value;
  std::vector<int> degree;
  std::vector<SVec> boundary;

  size_t size() const { return value.size(); }
};

struct ReducedPairs {
  std::vector<std::pair<int, int>> pairs;  // (birth cell, death cell), value may tie
  std::vector<int> essential;              // cells opening classes that never close
};

// column reduction with the clearing shortcut, degrees processed downward
ReducedPairs reduce_filtration(const FiltrationCells& cells, int p);

struct Bar {
  int dim = 0;
  double birth = 0.0;
  double death = infty;

  bool essential() const { return death == infty; }
  double length() const { return death - birth; }
};

struct Barcode {
  std::vector<Bar> bars;  // sorted by (dim, birth, death)

  // strict counts classes alive just below r, non-strict at r itself
  int betti_at(int dim, double r, bool strict) const;
  int max_dim() const;
};

Barcode persistence(const FilteredComplex& F, int p = 2);

// cells of a tuple complex ordered by (weight, degree, lex); exposed for
// rank bookkeeping on top of the same reduction
FiltrationCells tuple_filtration_cells(const TupleChainComplex& C);

Barcode bars_from_pairs(const FiltrationCells& cells, const ReducedPairs& red);

}  // namespace lprips
