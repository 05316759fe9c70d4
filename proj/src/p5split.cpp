#include "zetalie/p5split.hpp"

#include <algorithm>
#include <cstring>
#include <stdexcept>
#include <thread>

#include "zetalie/freelie.hpp"

namespace zetalie::p5 {

namespace {

size_t ipow(size_t b, int e) {
  size_t r = 1;
  while (e-- > 0) r *= b;
  return r;
}

bool all_zero(const int64_t* a, size_t n) {
  for (size_t i = 0; i < n; ++i)
    if (a[i]) return false;
  return true;
}

// out[i * nb + j] += s * a[i] * b[j]
void outer_acc(std::vector<int64_t>& out, const int64_t* a, size_t na, const int64_t* b, size_t nb,
               int64_t s) {
  for (size_t i = 0; i < na; ++i) {
    int64_t ai = a[i];
    if (!ai) continue;
    int64_t cs = checked_mul(ai, s);
    int64_t* row = out.data() + i * nb;
    for (size_t j = 0; j < nb; ++j)
      if (b[j]) row[j] = checked_madd(row[j], cs, b[j]);
  }
}

// concatenation bracket a*b - b*a on dense layers over an R-letter alphabet
std::vector<int64_t> dense_bracket(const std::vector<int64_t>& a, int da,
                                   const std::vector<int64_t>& b, int db, int R) {
  std::vector<int64_t> out(ipow(R, da + db), 0);
  outer_acc(out, a.data(), a.size(), b.data(), b.size(), 1);
  // subtract b*a: out[j * R^da + i] -= b[j] * a[i]
  size_t na = a.size(), nb = b.size();
  for (size_t j = 0; j < nb; ++j) {
    int64_t bj = b[j];
    if (!bj) continue;
    int64_t* row = out.data() + j * na;
    for (size_t i = 0; i < na; ++i)
      if (a[i]) row[i] = checked_madd(row[i], -bj, a[i]);
  }
  return out;
}

// Letter images of the two derivations on {u,v,w}: each letter maps to a
// combination of 2-letter words, given as (rank in 3^2, coeff).
using LetterImage = std::vector<std::pair<int, int64_t>>;
const std::array<LetterImage, 3> kDerivA = {{
    {{1, 1}, {3, -1}},   // u -> uv - vu
    {{1, -1}, {3, 1}},   // v -> -(uv - vu)
    {},                  // w -> 0
}};
const std::array<LetterImage, 3> kDerivB = {{
    {},                  // u -> 0
    {{5, 1}, {7, -1}},   // v -> vw - wv
    {{5, -1}, {7, 1}},   // w -> -(vw - wv)
}};

// Apply a derivation (letter images as above) to a dense degree-d layer over
// {u,v,w}; result has degree d+1. Leibniz on the leading letter:
// D(l . X_l) = D(l) . X_l + l . D(X_l).
void deriv_acc(const std::array<LetterImage, 3>& D, const int64_t* x, int d, int64_t s,
               int64_t* out) {
  if (d == 0) return;
  size_t block = ipow(3, d - 1);
  size_t out_block = block * 3;  // 3^d
  for (int l = 0; l < 3; ++l) {
    const int64_t* xl = x + l * block;
    if (all_zero(xl, block)) continue;
    for (const auto& [pair_rank, c] : D[l]) {
      int64_t cs = checked_mul(c, s);
      int64_t* dst = out + static_cast<size_t>(pair_rank) * block;
      for (size_t t = 0; t < block; ++t)
        if (xl[t]) dst[t] = checked_add(dst[t], checked_mul(cs, xl[t]));
    }
    deriv_acc(D, xl, d - 1, s, out + l * out_block);
  }
}

// result += s * phi(P)(Q), recursing on the leading letter of P
void act_acc(const int64_t* p, int dp, const int64_t* q, int dq, int64_t s,
             std::vector<int64_t>& out) {
  if (dp == 0) {
    if (p[0] == 0) return;
    int64_t cs = checked_mul(p[0], s);
    for (size_t i = 0; i < out.size(); ++i)
      if (q[i]) out[i] = checked_add(out[i], checked_mul(cs, q[i]));
    return;
  }
  size_t half = ipow(2, dp - 1);
  const std::array<const std::array<LetterImage, 3>*, 2> derivs = {&kDerivA, &kDerivB};
  for (int l = 0; l < 2; ++l) {
    const int64_t* pl = p + l * half;
    if (all_zero(pl, half)) continue;
    // inner = phi(P_l)(Q) at degree dp-1+dq, then one more derivation
    std::vector<int64_t> inner(ipow(3, dp - 1 + dq), 0);
    act_acc(pl, dp - 1, q, dq, 1, inner);
    if (!all_zero(inner.data(), inner.size()))
      deriv_acc(*derivs[l], inner.data(), dp - 1 + dq, s, out.data());
  }
}

}  // namespace

SplitElem SplitElem::zero(int deg) {
  SplitElem e;
  e.deg = deg;
  e.p.assign(ipow(2, deg), 0);
  e.q.assign(ipow(3, deg), 0);
  return e;
}

bool SplitElem::is_zero() const {
  return all_zero(p.data(), p.size()) && all_zero(q.data(), q.size());
}

SplitElem add(const SplitElem& x, const SplitElem& y, int64_t scale) {
  if (x.deg != y.deg) throw std::invalid_argument("SplitElem::add: degree mismatch");
  SplitElem r = x;
  for (size_t i = 0; i < r.p.size(); ++i)
    if (y.p[i]) r.p[i] = checked_madd(r.p[i], scale, y.p[i]);
  for (size_t i = 0; i < r.q.size(); ++i)
    if (y.q[i]) r.q[i] = checked_madd(r.q[i], scale, y.q[i]);
  return r;
}

std::vector<int64_t> act(const std::vector<int64_t>& p, int dp, const std::vector<int64_t>& q,
                         int dq) {
  std::vector<int64_t> out(ipow(3, dp + dq), 0);
  act_acc(p.data(), dp, q.data(), dq, 1, out);
  return out;
}

SplitElem bracket(const SplitElem& x, const SplitElem& y) {
  SplitElem r;
  r.deg = x.deg + y.deg;
  r.p = dense_bracket(x.p, x.deg, y.p, y.deg, 2);
  r.q = dense_bracket(x.q, x.deg, y.q, y.deg, 3);
  if (!all_zero(x.p.data(), x.p.size()) && !all_zero(y.q.data(), y.q.size()))
    act_acc(x.p.data(), x.deg, y.q.data(), y.deg, 1, r.q);
  if (!all_zero(y.p.data(), y.p.size()) && !all_zero(x.q.data(), x.q.size()))
    act_acc(y.p.data(), y.deg, x.q.data(), x.deg, -1, r.q);
  return r;
}

SplitElem generator(int i, int j) {
  if (i > j) std::swap(i, j);
  SplitElem e = SplitElem::zero(1);
  if (i == j) return e;  // x_{i,i} = 0
  auto set_p = [&](int64_t ca, int64_t cb) {
    e.p[0] = ca;
    e.p[1] = cb;
  };
  auto set_q = [&](int64_t cu, int64_t cv, int64_t cw) {
    e.q[0] = cu;
    e.q[1] = cv;
    e.q[2] = cw;
  };
  switch (i * 10 + j) {
    case 12: set_p(1, 0); break;
    case 23: set_p(0, 1); break;
    case 15: set_q(1, 0, 0); break;
    case 25: set_q(0, 1, 0); break;
    case 35: set_q(0, 0, 1); break;
    case 45: set_q(-1, -1, -1); break;
    case 13: set_p(-1, -1); set_q(-1, -1, -1); break;
    case 14: set_p(0, 1); set_q(0, 1, 1); break;
    case 34: set_p(1, 0); set_q(1, 1, 0); break;
    case 24: set_p(-1, -1); set_q(0, -1, 0); break;
    default: throw std::invalid_argument("generator: indices out of range");
  }
  return e;
}

std::pair<SplitElem, SplitElem> cycle_pair(int i) {
  auto m5 = [](int t) { return (t - 1) % 5 + 1; };
  int a = i + 1;  // 1-based
  return {generator(m5(a), m5(a + 1)), generator(m5(a + 1), m5(a + 2))};
}

IiiColumns assemble_iii_columns(int weight, int threads) {
  using freelie::LyndonBasis;
  IiiColumns cols;
  cols.weight = weight;
  const auto& top = LyndonBasis::get(weight, 2);
  size_t n_top = top.words.size();
  cols.colP.assign(n_top, std::vector<int64_t>(ipow(2, weight), 0));
  cols.colQ.assign(n_top, std::vector<int64_t>(ipow(3, weight), 0));

  for (int i = 0; i < 5; ++i) {
    auto [alpha, beta] = cycle_pair(i);
    // images of Lyndon elements of weights < w, memoized per layer
    std::vector<std::vector<SplitElem>> layer(weight);
    layer[0] = {alpha, beta};  // weight-1 basis is [x, y]
    for (int v = 2; v < weight; ++v) {
      const auto& bv = LyndonBasis::get(v, 2);
      layer[v - 1].reserve(bv.words.size());
      for (size_t e = 0; e < bv.words.size(); ++e) {
        int s = bv.split[e];
        const freelie::Word& wrd = bv.words[e];
        const auto& bl = LyndonBasis::get(s, 2);
        const auto& br = LyndonBasis::get(v - s, 2);
        const SplitElem& le = layer[s - 1][bl.index.at(wrd.substr(0, s))];
        const SplitElem& re = layer[v - s - 1][br.index.at(wrd.substr(s))];
        layer[v - 1].push_back(bracket(le, re));
      }
    }
    if (weight == 1) {
      for (size_t e = 0; e < n_top; ++e) {
        const SplitElem& im = layer[0][e];
        for (size_t t = 0; t < im.p.size(); ++t)
          cols.colP[e][t] = checked_add(cols.colP[e][t], im.p[t]);
        for (size_t t = 0; t < im.q.size(); ++t)
          cols.colQ[e][t] = checked_add(cols.colQ[e][t], im.q[t]);
      }
      continue;
    }
    // top layer in parallel, accumulating straight into the columns
    auto work = [&](size_t begin, size_t end) {
      for (size_t e = begin; e < end; ++e) {
        int s = top.split[e];
        const freelie::Word& wrd = top.words[e];
        const auto& bl = LyndonBasis::get(s, 2);
        const auto& br = LyndonBasis::get(weight - s, 2);
        const SplitElem& le = layer[s - 1][bl.index.at(wrd.substr(0, s))];
        const SplitElem& re = layer[weight - s - 1][br.index.at(wrd.substr(s))];
        SplitElem im = bracket(le, re);
        for (size_t t = 0; t < im.p.size(); ++t)
          if (im.p[t]) cols.colP[e][t] = checked_add(cols.colP[e][t], im.p[t]);
        for (size_t t = 0; t < im.q.size(); ++t)
          if (im.q[t]) cols.colQ[e][t] = checked_add(cols.colQ[e][t], im.q[t]);
      }
    };
    int nt = std::max(1, threads);
    if (nt == 1 || n_top < 8) {
      work(0, n_top);
    } else {
      std::vector<std::thread> pool;
      size_t chunk = (n_top + nt - 1) / nt;
      for (int t = 0; t < nt; ++t) {
        size_t b = t * chunk, e2 = std::min(n_top, b + chunk);
        if (b < e2) pool.emplace_back(work, b, e2);
      }
      for (auto& th : pool) th.join();
    }
  }
  return cols;
}

bool cycle_sum_vanishes(const IiiColumns& cols, const std::vector<Int>& coords) {
  if (coords.size() != cols.colP.size())
    throw std::invalid_argument("cycle_sum_vanishes: coordinate length mismatch");
  size_t np = cols.colP.empty() ? 0 : cols.colP[0].size();
  size_t nq = cols.colQ.empty() ? 0 : cols.colQ[0].size();
  std::vector<Int> accP(np, Int(0)), accQ(nq, Int(0));
  for (size_t e = 0; e < coords.size(); ++e) {
    if (coords[e] == 0) continue;
    for (size_t t = 0; t < np; ++t)
      if (cols.colP[e][t]) accP[t] += coords[e] * static_cast<long>(cols.colP[e][t]);
    for (size_t t = 0; t < nq; ++t)
      if (cols.colQ[e][t]) accQ[t] += coords[e] * static_cast<long>(cols.colQ[e][t]);
  }
  for (const auto& x : accP)
    if (x != 0) return false;
  for (const auto& x : accQ)
    if (x != 0) return false;
  return true;
}

}  // namespace zetalie::p5
