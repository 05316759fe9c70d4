#pragma once

#include <cstdint>
#include <functional>
#include <vector>

#include "zetalie/rational.hpp"

namespace zetalie::linalg {

using QVec = std::vector<Rat>;

// Row-reduce `rows` in place (dense, ncols columns); returns pivot column list.
std::vector<int> rref(std::vector<QVec>& rows);

// Basis of the kernel of the row system (dense rows over ncols columns).
std::vector<QVec> kernel_basis(std::vector<QVec> rows, int ncols);

// Rank of a dense rational matrix.
int rank(std::vector<QVec> rows);

// Reduced echelon form of span(vectors) where columns are visited in the
// given order. The result is a basis of the same span; vector i has its pivot
// at col_order[k_i] with k_0 < k_1 < ..., pivot entry 1, zeros in all earlier
// columns of the order and in other pivots.
std::vector<QVec> echelon_with_order(std::vector<QVec> vectors,
                                     const std::vector<int>& col_order);

// dim of the subspace of span(basis) cut out by the linear conditions
// "coordinate c = 0 for all c in zero_cols", together with a basis of it.
std::vector<QVec> subspace_with_zero_coords(const std::vector<QVec>& basis,
                                            const std::vector<int>& zero_cols);

// Does v lie in span(basis)? Optionally returns the combination.
bool in_span(const std::vector<QVec>& basis, const QVec& v, QVec* combo = nullptr);

// ---- word-size prime arithmetic (p < 2^62) ----
struct Mod64 {
  uint64_t p;

  uint64_t add(uint64_t a, uint64_t b) const {
    uint64_t s = a + b;
    return s >= p ? s - p : s;
  }
  uint64_t sub(uint64_t a, uint64_t b) const { return a >= b ? a - b : a + p - b; }
  uint64_t mul(uint64_t a, uint64_t b) const {
    return static_cast<uint64_t>((static_cast<__uint128_t>(a) * b) % p);
  }
  uint64_t pow(uint64_t b, uint64_t e) const {
    uint64_t r = 1;
    while (e) {
      if (e & 1) r = mul(r, b);
      b = mul(b, b);
      e >>= 1;
    }
    return r;
  }
  uint64_t inv(uint64_t a) const { return pow(a, p - 2); }
  uint64_t from_int64(int64_t x) const {
    int64_t m = x % static_cast<int64_t>(p);
    return static_cast<uint64_t>(m < 0 ? m + static_cast<int64_t>(p) : m);
  }
  uint64_t from_rat(const Rat& q) const;
};

// A few fixed 62-bit primes for screening plus deterministic pseudo-random ones.
std::vector<uint64_t> screening_primes(int count, uint64_t seed = 0);

// Incremental mod-p echelon with pivot-row provenance: feed rows one at a
// time; `feed` returns true when the row added a new pivot.
class ModEchelon {
 public:
  ModEchelon(Mod64 f, int ncols) : f_(f), ncols_(ncols) {}

  bool feed(std::vector<uint64_t> row, int64_t tag);
  int rank() const { return static_cast<int>(rows_.size()); }
  const std::vector<int64_t>& pivot_tags() const { return tags_; }

 private:
  Mod64 f_;
  int ncols_;
  std::vector<std::vector<uint64_t>> rows_;  // echelonized, leading entry 1
  std::vector<int> pivot_col_;
  std::vector<int64_t> tags_;
};

}  // namespace zetalie::linalg
