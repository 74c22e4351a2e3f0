#include "lprips/field.hpp"

#include <bit>
#include <cstdint>

namespace lprips {

PrimeField::PrimeField(int prime) : p(prime) {
  if (prime < 2) throw input_error("field characteristic must be a prime >= 2");
  for (int d = 2; static_cast<long long>(d) * d <= prime; ++d)
    if (prime % d == 0)
      throw input_error("field characteristic " + std::to_string(prime) + " is not prime");
}

int PrimeField::inv(int a) const {
  if (a == 0) throw input_error("zero has no inverse");
  // fermat
  int out = 1, base = a, e = p - 2;
  while (e) {
    if (e & 1) out = mul(out, base);
    base = mul(base, base);
    e >>= 1;
  }
  return out;
}

SparseVec sv_reduce_mod(const SVec& v, const PrimeField& f) {
  SparseVec out;
  out.reserve(v.size());
  for (const auto& [i, c] : v) {
    const int r = f.reduce(c);
    if (r) out.emplace_back(i, r);
  }
  return out;
}

SparseVec sv_axpy(const SparseVec& a, int c, const SparseVec& b, const PrimeField& f) {
  if (c == 0) return a;
  SparseVec out;
  out.reserve(a.size() + b.size());
  size_t i = 0, j = 0;
  while (i < a.size() || j < b.size()) {
    if (j == b.size() || (i < a.size() && a[i].first < b[j].first)) {
      out.push_back(a[i++]);
    } else if (i == a.size() || b[j].first < a[i].first) {
      const int v = f.mul(c, b[j].second);
      if (v) out.emplace_back(b[j].first, v);
      ++j;
    } else {
      const int v = f.add(a[i].second, f.mul(c, b[j].second));
      if (v) out.emplace_back(a[i].first, v);
      ++i;
      ++j;
    }
  }
  return out;
}

SparseVec sv_scale(const SparseVec& a, int c, const PrimeField& f) {
  SparseVec out;
  out.reserve(a.size());
  for (const auto& [i, v] : a) {
    const int w = f.mul(v, c);
    if (w) out.emplace_back(i, w);
  }
  return out;
}

SparseVec sv_add(const SparseVec& a, const SparseVec& b, const PrimeField& f) {
  return sv_axpy(a, 1, b, f);
}

void AugReducer::reduce(SparseVec& head, SparseVec& tail) const {
  while (!head.empty()) {
    const auto it = by_pivot_.find(head.back().first);
    if (it == by_pivot_.end()) return;
    const int c = f_.neg(head.back().second);  // stored pivot coefficient is 1
    head = sv_axpy(head, c, heads_[it->second], f_);
    tail = sv_axpy(tail, c, tails_[it->second], f_);
  }
}

int AugReducer::store(SparseVec head, SparseVec tail) {
  const int inv = f_.inv(head.back().second);
  if (inv != 1) {
    head = sv_scale(head, inv, f_);
    tail = sv_scale(tail, inv, f_);
  }
  const int slot = static_cast<int>(heads_.size());
  by_pivot_[head.back().first] = slot;
  heads_.push_back(std::move(head));
  tails_.push_back(std::move(tail));
  return slot;
}

int AugReducer::add(SparseVec head, SparseVec tail) {
  reduce(head, tail);
  if (head.empty()) return -1;
  return store(std::move(head), std::move(tail));
}

int rank_mod2(int rows, const std::vector<SVec>& cols) {
  const int words = (rows + 63) / 64;
  std::vector<std::vector<uint64_t>> by_pivot(rows);
  std::vector<uint64_t> cur(words);
  int rank = 0;
  for (const auto& col : cols) {
    std::fill(cur.begin(), cur.end(), 0);
    bool any = false;
    for (const auto& [r, c] : col)
      if (c & 1) {
        cur[r >> 6] ^= uint64_t{1} << (r & 63);
        any = true;
      }
    if (!any) continue;
    while (true) {
      int pv = -1;
      for (int w = words - 1; w >= 0; --w)
        if (cur[w]) {
          pv = (w << 6) + 63 - std::countl_zero(cur[w]);
          break;
        }
      if (pv < 0) break;
      auto& owner = by_pivot[pv];
      if (owner.empty()) {
        owner = cur;
        ++rank;
        break;
      }
      for (int w = 0; w < words; ++w) cur[w] ^= owner[w];
    }
  }
  return rank;
}

int rank_mod_p(const std::vector<SVec>& cols, const PrimeField& f) {
  AugReducer red(f);
  for (const auto& col : cols) red.add(sv_reduce_mod(col, f), {});
  return red.rank();
}

int dense_rank(std::vector<int> a, int rows, int cols, const PrimeField& f) {
  int rank = 0;
  for (int c = 0; c < cols && rank < rows; ++c) {
    int pr = -1;
    for (int r = rank; r < rows; ++r)
      if (a[static_cast<size_t>(r) * cols + c]) {
        pr = r;
        break;
      }
    if (pr < 0) continue;
    for (int j = 0; j < cols; ++j)
      std::swap(a[static_cast<size_t>(rank) * cols + j], a[static_cast<size_t>(pr) * cols + j]);
    const int inv = f.inv(a[static_cast<size_t>(rank) * cols + c]);
    for (int j = c; j < cols; ++j)
      a[static_cast<size_t>(rank) * cols + j] = f.mul(a[static_cast<size_t>(rank) * cols + j], inv);
    for (int r = 0; r < rows; ++r) {
      if (r == rank) continue;
      const int m = a[static_cast<size_t>(r) * cols + c];
      if (!m) continue;
      for (int j = c; j < cols; ++j)
        a[static_cast<size_t>(r) * cols + j] =
            f.sub(a[static_cast<size_t>(r) * cols + j], f.mul(m, a[static_cast<size_t>(rank) * cols + j]));
    }
    ++rank;
  }
  return rank;
}

}  // namespace lprips
