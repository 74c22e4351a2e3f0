#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "lprips/kernels.hpp"
#include "lprips/metric.hpp"
#include "lprips/norms.hpp"

namespace lprips {

// global guard on enumerated cells per degree; LPRIPS_MAX_CELLS overrides
uint64_t cell_cap();

struct Simplex {
  std::vector<int> vertices;  // strictly increasing
  double value = 0.0;
};

// all subsets up to max_dim, each carrying its subset weight, sorted within
// every dimension by (value, lex)
struct FilteredComplex {
  int n_points = 0;
  NormDescriptor norm;
  int max_dim = 0;
  std::vector<std::vector<Simplex>> simplices;

  size_t total_cells() const;
};

FilteredComplex build_vr_filtration(const FiniteMetricSpace& X, const NormDescriptor& nu,
                                    int max_dim, int threads = 1);

// plain simplicial complex, faces lex sorted within each dimension
struct SimplicialComplex {
  int n_vertices = 0;
  std::vector<std::vector<std::vector<int>>> faces;

  int top_dim() const { return static_cast<int>(faces.size()) - 1; }
  bool has_face(const std::vector<int>& f) const;
  size_t total_cells() const;

  // downward closure of the given faces (vertices normalized and deduplicated)
  static SimplicialComplex from_maximal(int n_vertices,
                                        const std::vector<std::vector<int>>& maximal);
};

// subcomplex of simplices whose value lies in L
SimplicialComplex slice_at(const FilteredComplex& F, const LeftInterval& L);

// consecutive-distinct tuples filtered by tuple weight, degreewise, each
// degree extending the previous one (faces of a kept tuple are always kept,
// so extension loses nothing)
struct TupleChainComplex {
  int n_points = 0;
  NormDescriptor norm;
  LeftInterval interval;
  int max_deg = 0;
  std::vector<std::vector<std::vector<int>>> basis;
  std::vector<std::vector<double>> weights;

  size_t total_cells() const;
  int degree_size(int k) const {
    return k >= 0 && k <= max_deg ? static_cast<int>(basis[k].size()) : 0;
  }
};

TupleChainComplex build_tuple_complex(const FiniteMetricSpace& X, const NormDescriptor& nu,
                                      const LeftInterval& L, int max_deg, int threads = 1);

// consecutive-distinct tuples supported on faces of K (weights all zero);
// for the full simplex on m vertices degree n has m*(m-1)^n tuples
TupleChainComplex ss_of_complex(const SimplicialComplex& K, int max_deg);

// nerve of a cover of K by vertex subsets: one vertex per cover element
// containing a vertex of K, a face per subfamily with a common vertex.
// Errors if some face of K lies in no single cover element.
SimplicialComplex nerve_complex(const SimplicialComplex& K,
                                const std::vector<std::vector<int>>& cover);

struct CoverCriterionReport {
  bool holds = true;
  int x = -1, y = -1;  // first pair whose ellipse fits in no cover element
};

// whether every ellipse at threshold L between points at distance in L is
// contained in a single cover element
CoverCriterionReport ellipse_cover_criterion(const FiniteMetricSpace& X,
                                             const NormDescriptor& nu, const LeftInterval& L,
                                             const std::vector<std::vector<int>>& cover);

struct SandwichReport {
  bool lower_ok = true;     // exponent-1 tuples all present under nu
  bool upper_ok = true;     // nu tuples all present under exponent infinity
  bool skeleton_ok = true;  // sup complex below r/C_n sits inside nu below r
  double constant = 0.0;    // C_n used for the rescaled inclusion
  std::vector<int> counts_l1, counts_nu, counts_linf;  // basis sizes per degree
  std::vector<int> witness;                            // first offending tuple
  int witness_degree = -1;
  std::string failed_part;

  bool ok() const { return lower_ok && upper_ok && skeleton_ok; }
};

// inclusion sandwich at threshold r through degree n
SandwichReport sandwich_check(const FiniteMetricSpace& X, const NormDescriptor& nu,
                              double r, int n, int threads = 1);

}  // namespace lprips
