#pragma once

#include <string>
#include <vector>

#include "lprips/chain.hpp"
#include "lprips/complexes.hpp"

namespace lprips {

// Betti number over Z/p. For tuple complexes the top stored degree is
// rejected since its boundary-from-above is truncated away.
int betti(const SimplicialComplex& K, int degree, int p);
int betti(const TupleChainComplex& C, int degree, int p);

struct InducedMap {
  int degree = 0;
  int p = 2;
  int src_rank = 0, tgt_rank = 0;
  std::vector<std::vector<int>> matrix;  // tgt_rank rows, src_rank columns
  int rank = 0;
};

// map on homology induced by a vertex map between complexes; errors name the
// first simplex or tuple whose image is missing from the target
InducedMap induced_map(const SimplicialComplex& src, const SimplicialComplex& tgt,
                       const std::vector<int>& vertex_map, int degree, int p);
InducedMap induced_map(const TupleChainComplex& src, const TupleChainComplex& tgt,
                       const std::vector<int>& vertex_map, int degree, int p);

struct HomotopyReport {
  bool ok = true;
  int degree = -1;
  std::vector<int> witness;  // source tuple where the identity fails
  std::string detail;
};

// verifies the interpolating-prism identity boundary(P) + P(boundary) = g - f
// column by column, for every degree the complexes support
HomotopyReport chain_homotopy_check(const TupleChainComplex& src, const TupleChainComplex& tgt,
                                    const std::vector<int>& f, const std::vector<int>& g, int p);

}  // namespace lprips
