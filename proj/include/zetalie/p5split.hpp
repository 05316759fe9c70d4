#pragma once

#include <array>
#include <cstdint>
#include <vector>

#include "zetalie/rational.hpp"

namespace zetalie::p5 {

// The braid Lie algebra P^(5) realized as the extension of the free Lie
// algebra on two generators by the free Lie algebra on three: elements are
// pairs (p, q), p in FreeLie(a,b), q in the free ideal FreeLie(u,v,w), with
//   u = x_{1,5}, v = x_{2,5}, w = x_{3,5}, a = x_{1,2}, b = x_{2,3},
// and a, b acting on the ideal by the derivations
//   a: u -> [u,v], v -> -[u,v], w -> 0
//   b: u -> 0, v -> [v,w], w -> -[v,w].
// Homogeneous components are dense coefficient arrays indexed by word rank
// (first letter most significant). All coefficients are exact int64 with
// overflow checks; the realization is certified against the presentation by
// braidlie tests (all relators vanish, dims match the nilpotent quotient).

struct SplitElem {
  int deg = 0;
  std::vector<int64_t> p;  // size 2^deg, words over {a,b}
  std::vector<int64_t> q;  // size 3^deg, words over {u,v,w}

  static SplitElem zero(int deg);
  bool is_zero() const;
};

// the ten generators x_{i,j} (1 <= i < j <= 5) in split coordinates
SplitElem generator(int i, int j);

SplitElem add(const SplitElem& x, const SplitElem& y, int64_t scale = 1);
SplitElem bracket(const SplitElem& x, const SplitElem& y);

// phi(P)(Q): action of a Lie element of FreeLie(a,b), given as a dense word
// polynomial, on a dense {u,v,w} polynomial.
std::vector<int64_t> act(const std::vector<int64_t>& p, int dp, const std::vector<int64_t>& q,
                         int dq);

// Images under the pentagon substitution cycle: pair i (0..4) is
// (x_{i,i+1}, x_{i+1,i+2}) with indices mod 5 in 1..5.
std::pair<SplitElem, SplitElem> cycle_pair(int i);

// Columns of the condition-(iii) constraint: for every Lyndon basis element e
// of the weight-w free Lie algebra on {x,y}, the expansion of
// sum_i e(x_{i,i+1}, x_{i+1,i+2}) in P^(5) split coordinates.
struct IiiColumns {
  int weight = 0;
  std::vector<std::vector<int64_t>> colP;  // [lyndon index] -> 2^w array
  std::vector<std::vector<int64_t>> colQ;  // [lyndon index] -> 3^w array
};

IiiColumns assemble_iii_columns(int weight, int threads);

// sum_i f(x_{i,i+1}, x_{i+1,i+2}) for a single Lie element given by integer
// Lyndon coordinates of weight w, against precomputed columns; returns true
// iff the image vanishes.
bool cycle_sum_vanishes(const IiiColumns& cols, const std::vector<Int>& coords);

}  // namespace zetalie::p5
