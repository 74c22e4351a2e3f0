#pragma once

#include <unordered_map>
#include <utility>
#include <vector>

#include "lprips/errors.hpp"

namespace lprips {

// arithmetic in Z/p for a small prime p
struct PrimeField {
  int p = 2;

  explicit PrimeField(int prime);
  int reduce(long long v) const {
    int r = static_cast<int>(v % p);
    return r < 0 ? r + p : r;
  }
  int add(int a, int b) const {
    const int s = a + b;
    return s >= p ? s - p : s;
  }
  int sub(int a, int b) const {
    const int s = a - b;
    return s < 0 ? s + p : s;
  }
  int mul(int a, int b) const { return static_cast<int>(static_cast<long long>(a) * b % p); }
  int neg(int a) const { return a ? p - a : 0; }
  int inv(int a) const;
};

// sparse vector over Z/p: (index, coefficient) sorted by index, coefficients
// nonzero and already reduced
using SparseVec = std::vector<std::pair<int, int>>;

// integer sparse vector (coefficients over Z, typically +-1)
using SVec = std::vector<std::pair<int, int>>;

SparseVec sv_reduce_mod(const SVec& v, const PrimeField& f);
// a + c*b
SparseVec sv_axpy(const SparseVec& a, int c, const SparseVec& b, const PrimeField& f);
SparseVec sv_scale(const SparseVec& a, int c, const PrimeField& f);
SparseVec sv_add(const SparseVec& a, const SparseVec& b, const PrimeField& f);
inline int sv_pivot(const SparseVec& v) { return v.empty() ? -1 : v.back().first; }

// column echelon accumulator with pivot = largest index; stored columns keep
// pivot coefficient 1. Tails ride along through the same row operations, so a
// caller can track combinations or homology-class coordinates.
class AugReducer {
 public:
  explicit AugReducer(PrimeField f) : f_(f) {}

  void reduce(SparseVec& head, SparseVec& tail) const;
  // pre: head reduced and nonzero; normalizes pivot to 1 and returns the slot
  int store(SparseVec head, SparseVec tail);
  // convenience: reduce, store if nonzero, return slot or -1
  int add(SparseVec head, SparseVec tail);

  int rank() const { return static_cast<int>(heads_.size()); }
  const SparseVec& head(int i) const { return heads_[i]; }
  const SparseVec& tail(int i) const { return tails_[i]; }

 private:
  PrimeField f_;
  std::vector<SparseVec> heads_;
  std::vector<SparseVec> tails_;
  std::unordered_map<int, int> by_pivot_;
};

// rank of a sparse integer matrix mod 2 via packed columns
int rank_mod2(int rows, const std::vector<SVec>& cols);

// rank of a sparse integer matrix mod p
int rank_mod_p(const std::vector<SVec>& cols, const PrimeField& f);

// rank of a small dense matrix (row-major, rows x cols) mod p
int dense_rank(std::vector<int> a, int rows, int cols, const PrimeField& f);

}  // namespace lprips
