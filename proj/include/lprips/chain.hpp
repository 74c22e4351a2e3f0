#pragma once

#include <string>
#include <vector>

#include "lprips/complexes.hpp"
#include "lprips/field.hpp"

namespace lprips {

// chain complex over Z with integer boundary columns; coefficients are
// reduced into a field at computation time
struct ChainComplex {
  std::vector<int> dims;                  // basis size per degree
  std::vector<std::vector<SVec>> bnd;     // bnd[k][j] = boundary of j-th degree-k element, k >= 1

  int degrees() const { return static_cast<int>(dims.size()); }
  int dim_at(int k) const { return k >= 0 && k < degrees() ? dims[k] : 0; }
  const std::vector<SVec>& boundary_at(int k) const;
};

// normalized chains: faces drop one entry, degenerate results are discarded,
// repeated faces accumulate signed coefficients
ChainComplex chain_of_tuples(const TupleChainComplex& C);

// oriented simplicial chains on lex-sorted vertex lists
ChainComplex chain_of_simplicial(const SimplicialComplex& K);

int betti_of_chain(const ChainComplex& cc, int degree, int p);

// homology basis with cycle representatives and a solver that expresses any
// cycle in those representatives
class HomologyBasis {
 public:
  HomologyBasis(const ChainComplex& cc, int degree, int p);

  int rank() const { return static_cast<int>(reps_.size()); }
  const SparseVec& rep(int i) const { return reps_[i]; }
  int degree() const { return degree_; }

  // coordinates of the class of a cycle, length rank(); rejects chains that
  // are not in the cycle space
  std::vector<int> express(const SparseVec& cycle) const;

 private:
  int degree_;
  PrimeField f_;
  std::vector<SparseVec> reps_;
  AugReducer solver_;
};

// degreewise chain map given by integer columns
struct ChainMap {
  std::vector<std::vector<SVec>> cols;  // cols[k][j] = image of source basis j in target coords

  SVec apply(int k, const SVec& v) const;
};

// simplicial-set map on tuple complexes induced by a vertex map; errors with
// a witness when a nondegenerate image tuple is missing from the target
ChainMap tuple_chain_map(const TupleChainComplex& src, const TupleChainComplex& tgt,
                         const std::vector<int>& vertex_map, const std::string& what);

// simplicial map: collapsing images vanish, others pick up the sort sign
ChainMap simplicial_chain_map(const SimplicialComplex& src, const SimplicialComplex& tgt,
                              const std::vector<int>& vertex_map, const std::string& what);

// map on homology: matrix (tgt rank x src rank) in the two bases
std::vector<std::vector<int>> homology_matrix(const ChainMap& map, int degree,
                                              const HomologyBasis& src, const HomologyBasis& tgt,
                                              const PrimeField& f);

int matrix_rank(const std::vector<std::vector<int>>& m, const PrimeField& f);

}  // namespace lprips
