#include "zetalie/linalg.hpp"

#include <algorithm>
#include <numeric>

namespace zetalie::linalg {

std::vector<int> rref(std::vector<QVec>& rows) {
  std::vector<int> pivots;
  if (rows.empty()) return pivots;
  int ncols = static_cast<int>(rows[0].size());
  size_t r = 0;
  for (int c = 0; c < ncols && r < rows.size(); ++c) {
    size_t sel = r;
    while (sel < rows.size() && rows[sel][c] == 0) ++sel;
    if (sel == rows.size()) continue;
    std::swap(rows[r], rows[sel]);
    Rat inv = 1 / rows[r][c];
    for (auto& x : rows[r]) x *= inv;
    for (size_t i = 0; i < rows.size(); ++i) {
      if (i == r || rows[i][c] == 0) continue;
      Rat f = rows[i][c];
      for (int j = c; j < ncols; ++j) rows[i][j] -= f * rows[r][j];
    }
    pivots.push_back(c);
    ++r;
  }
  rows.resize(r);
  return pivots;
}

std::vector<QVec> kernel_basis(std::vector<QVec> rows, int ncols) {
  std::vector<int> pivots = rref(rows);
  std::vector<bool> is_pivot(ncols, false);
  for (int c : pivots) is_pivot[c] = true;
  std::vector<QVec> ker;
  for (int fc = 0; fc < ncols; ++fc) {
    if (is_pivot[fc]) continue;
    QVec v(ncols, Rat(0));
    v[fc] = 1;
    for (size_t r = 0; r < pivots.size(); ++r) v[pivots[r]] = -rows[r][fc];
    ker.push_back(std::move(v));
  }
  return ker;
}

int rank(std::vector<QVec> rows) { return static_cast<int>(rref(rows).size()); }

std::vector<QVec> echelon_with_order(std::vector<QVec> vectors,
                                     const std::vector<int>& col_order) {
  std::vector<QVec> ech;       // in pivot order of col_order
  std::vector<int> pivot_pos;  // position within col_order
  for (auto& v : vectors) {
    QVec w = std::move(v);
    for (size_t k = 0; k < ech.size(); ++k) {
      const Rat& f = w[col_order[pivot_pos[k]]];
      if (f == 0) continue;
      Rat ff = f;
      for (size_t j = 0; j < w.size(); ++j) w[j] -= ff * ech[k][j];
    }
    int pp = -1;
    for (size_t k = 0; k < col_order.size(); ++k) {
      if (w[col_order[k]] != 0) {
        pp = static_cast<int>(k);
        break;
      }
    }
    if (pp < 0) continue;
    Rat inv = 1 / w[col_order[pp]];
    for (auto& x : w) x *= inv;
    // back-substitute into existing rows
    for (size_t k = 0; k < ech.size(); ++k) {
      const Rat f = ech[k][col_order[pp]];
      if (f == 0) continue;
      for (size_t j = 0; j < w.size(); ++j) ech[k][j] -= f * w[j];
    }
    ech.push_back(std::move(w));
    pivot_pos.push_back(pp);
  }
  // sort by pivot position
  std::vector<size_t> idx(ech.size());
  std::iota(idx.begin(), idx.end(), 0);
  std::sort(idx.begin(), idx.end(), [&](size_t a, size_t b) { return pivot_pos[a] < pivot_pos[b]; });
  std::vector<QVec> out;
  out.reserve(ech.size());
  for (size_t k : idx) out.push_back(std::move(ech[k]));
  return out;
}

std::vector<QVec> subspace_with_zero_coords(const std::vector<QVec>& basis,
                                            const std::vector<int>& zero_cols) {
  if (basis.empty()) return {};
  // constraint matrix over the combination coefficients
  std::vector<QVec> rows;
  for (int c : zero_cols) {
    QVec row(basis.size());
    bool nz = false;
    for (size_t j = 0; j < basis.size(); ++j) {
      row[j] = basis[j][c];
      nz = nz || row[j] != 0;
    }
    if (nz) rows.push_back(std::move(row));
  }
  auto combos = kernel_basis(std::move(rows), static_cast<int>(basis.size()));
  std::vector<QVec> out;
  for (const auto& combo : combos) {
    QVec v(basis[0].size(), Rat(0));
    for (size_t j = 0; j < basis.size(); ++j)
      if (combo[j] != 0)
        for (size_t c = 0; c < v.size(); ++c) v[c] += combo[j] * basis[j][c];
    out.push_back(std::move(v));
  }
  return out;
}

bool in_span(const std::vector<QVec>& basis, const QVec& v, QVec* combo) {
  if (basis.empty()) {
    bool zero = std::all_of(v.begin(), v.end(), [](const Rat& x) { return x == 0; });
    if (zero && combo) combo->clear();
    return zero;
  }
  // echelonize the basis, tracking the combination
  size_t n = v.size(), m = basis.size();
  std::vector<QVec> rows(m);
  for (size_t i = 0; i < m; ++i) {
    rows[i] = basis[i];
    rows[i].resize(n + m, Rat(0));
    rows[i][n + i] = 1;
  }
  // eliminate on the first n columns only
  std::vector<int> pivots;
  size_t r = 0;
  for (size_t c = 0; c < n && r < m; ++c) {
    size_t sel = r;
    while (sel < m && rows[sel][c] == 0) ++sel;
    if (sel == m) continue;
    std::swap(rows[r], rows[sel]);
    Rat inv = 1 / rows[r][c];
    for (auto& x : rows[r]) x *= inv;
    for (size_t i = 0; i < m; ++i) {
      if (i == r || rows[i][c] == 0) continue;
      Rat f = rows[i][c];
      for (size_t j = 0; j < n + m; ++j) rows[i][j] -= f * rows[r][j];
    }
    pivots.push_back(static_cast<int>(c));
    ++r;
  }
  QVec w = v;
  QVec comb(m, Rat(0));
  for (size_t k = 0; k < pivots.size(); ++k) {
    const Rat f = w[pivots[k]];
    if (f == 0) continue;
    for (size_t j = 0; j < n; ++j) w[j] -= f * rows[k][j];
    for (size_t j = 0; j < m; ++j) comb[j] += f * rows[k][n + j];
  }
  bool zero = std::all_of(w.begin(), w.end(), [](const Rat& x) { return x == 0; });
  if (zero && combo) *combo = comb;
  return zero;
}

uint64_t Mod64::from_rat(const Rat& q) const {
  Int pz(static_cast<unsigned long>(p));
  Int num = q.get_num() % pz;
  if (num < 0) num += pz;
  Int den = q.get_den() % pz;
  uint64_t n = mpz_get_ui(num.get_mpz_t());
  uint64_t d = mpz_get_ui(den.get_mpz_t());
  if (d == 0) throw std::invalid_argument("Mod64: denominator divisible by p");
  return mul(n, inv(d));
}

std::vector<uint64_t> screening_primes(int count, uint64_t seed) {
  // deterministic scan downward from 2^62 for primality (Miller-Rabin)
  auto is_prime = [](uint64_t n) {
    if (n < 4) return n > 1;
    if (n % 2 == 0) return false;
    Mod64 f{n};
    uint64_t d = n - 1;
    int s = 0;
    while (d % 2 == 0) d /= 2, ++s;
    for (uint64_t a : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL, 31ULL, 37ULL}) {
      if (a % n == 0) continue;
      uint64_t x = f.pow(a % n, d);
      if (x == 1 || x == n - 1) continue;
      bool comp = true;
      for (int i = 1; i < s; ++i) {
        x = f.mul(x, x);
        if (x == n - 1) {
          comp = false;
          break;
        }
      }
      if (comp) return false;
    }
    return true;
  };
  std::vector<uint64_t> out;
  uint64_t n = (1ULL << 62) - 1 - 2 * (seed % 1000003);
  if (n % 2 == 0) --n;
  while (static_cast<int>(out.size()) < count) {
    if (is_prime(n)) out.push_back(n);
    n -= 2;
  }
  return out;
}

bool ModEchelon::feed(std::vector<uint64_t> row, int64_t tag) {
  for (size_t k = 0; k < rows_.size(); ++k) {
    uint64_t f = row[pivot_col_[k]];
    if (f == 0) continue;
    const auto& er = rows_[k];
    for (int j = 0; j < ncols_; ++j)
      if (er[j]) row[j] = f_.sub(row[j], f_.mul(f, er[j]));
  }
  int pc = -1;
  for (int j = 0; j < ncols_; ++j)
    if (row[j]) {
      pc = j;
      break;
    }
  if (pc < 0) return false;
  uint64_t inv = f_.inv(row[pc]);
  for (int j = 0; j < ncols_; ++j)
    if (row[j]) row[j] = f_.mul(row[j], inv);
  rows_.push_back(std::move(row));
  pivot_col_.push_back(pc);
  tags_.push_back(tag);
  return true;
}

}  // namespace zetalie::linalg
