#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "zetalie/rational.hpp"

namespace zetalie::freelie {

// Words over a small alphabet are strings of letter indices (0, 1, ...).
// Lexicographic order on these strings is the alphabet order.
using Word = std::string;

inline Word make_word(std::initializer_list<int> letters) {
  Word w;
  for (int l : letters) w.push_back(static_cast<char>(l));
  return w;
}

bool is_lyndon(const Word& w);

// All Lyndon words of length `weight` over `r` letters, in lexicographic
// order (Duval's algorithm).
std::vector<Word> lyndon_words(int weight, int r);

// Count without materializing; used by the Witt cross-checks at sizes where
// storing the words would be wasteful.
uint64_t count_lyndon_words(int weight, int r);

// Witt formula (1/w) sum_{d|w} mu(d) r^{w/d}.
uint64_t witt_dimension(int weight, int r);

// Standard factorization w = u.v of a Lyndon word, v the longest proper
// Lyndon suffix. Returns the split position |u|.
int std_factorization(const Word& w);

// Expansion of the standard (right) bracketing of a Lyndon word in the tensor
// algebra. Coefficients are integers; terms sorted by word.
using IntTerm = std::pair<Word, int64_t>;
using IntPoly = std::vector<IntTerm>;  // sorted by word, no zero coefficients

IntPoly bracketing_expansion(const Word& lyndon);

// Sparse exact noncommutative polynomial.
using NcPoly = std::map<Word, Rat>;

void nc_add_inplace(NcPoly& a, const NcPoly& b, const Rat& scale = Rat(1));
NcPoly nc_mul(const NcPoly& a, const NcPoly& b);
NcPoly nc_bracket(const NcPoly& a, const NcPoly& b);
NcPoly from_int_poly(const IntPoly& p, const Rat& scale = Rat(1));

// One weight layer of the Lyndon basis of the free Lie algebra on r letters.
struct LyndonBasis {
  int weight = 0;
  int letters = 0;
  std::vector<Word> words;              // lexicographic
  std::vector<int> split;               // std_factorization positions (0 for single letters)
  std::vector<IntPoly> expansion;       // tensor-algebra expansions of the bracketings
  std::map<Word, int> index;

  static const LyndonBasis& get(int weight, int r);  // cached, thread-safe
};

// Coordinates of a homogeneous Lie element over the Lyndon basis, by
// triangular elimination on leading words. Throws NotLieElement if a nonzero
// remainder survives.
std::vector<Rat> lyndon_coords(const NcPoly& f, int weight, int r);

// Inverse direction: assemble sum c_i * basis_i as a polynomial.
NcPoly from_lyndon_coords(const std::vector<Rat>& coords, int weight, int r);

// An element of the free graded Lie algebra over named generators.
class LiePoly {
 public:
  LiePoly() = default;
  LiePoly(std::vector<std::string> alphabet, NcPoly terms);

  static LiePoly generator(const std::vector<std::string>& alphabet, int letter);
  static LiePoly zero(const std::vector<std::string>& alphabet);

  const std::vector<std::string>& alphabet() const { return alphabet_; }
  const NcPoly& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  bool is_homogeneous(int* weight_out = nullptr) const;

  // Per-generator letter counts of a term; all terms of a weight layer share
  // the total, not the multidegree.
  static std::vector<int> multidegree(const Word& w, int r);

  friend LiePoly operator+(const LiePoly& a, const LiePoly& b);
  friend LiePoly operator-(const LiePoly& a, const LiePoly& b);
  LiePoly operator*(const Rat& s) const;
  friend LiePoly bracket(const LiePoly& a, const LiePoly& b);

  bool operator==(const LiePoly& o) const {
    return alphabet_ == o.alphabet_ && terms_ == o.terms_;
  }

  // Lyndon-coordinate round trip on the weight-w layer; NotLieElement if f is
  // not in the Lie subspace.
  std::vector<Rat> lyndon_coordinates(int weight) const;

  std::string to_string() const;

 private:
  std::vector<std::string> alphabet_;
  NcPoly terms_;
};

// Substitute generators by images in an arbitrary Lie algebra. The target is
// described by its bilinear bracket and linear combination; f is routed
// through its Lyndon bracketing trees, so only brackets of the images are
// formed. Requires f homogeneous.
template <typename Elem, typename BracketFn, typename AxpyFn>
Elem lie_substitute_homogeneous(const NcPoly& f, int weight, int r,
                                const std::vector<Elem>& images, BracketFn&& br,
                                AxpyFn&& axpy, Elem zero) {
  const auto coords = lyndon_coords(f, weight, r);
  const auto& basis = LyndonBasis::get(weight, r);
  // memoized images of Lyndon elements of each weight <= w
  std::map<Word, Elem> memo;
  for (int v = 1; v <= weight; ++v) {
    const auto& bv = LyndonBasis::get(v, r);
    for (size_t i = 0; i < bv.words.size(); ++i) {
      const Word& w = bv.words[i];
      if (v == 1) {
        memo.emplace(w, images[static_cast<unsigned char>(w[0])]);
      } else {
        int s = bv.split[i];
        memo.emplace(w, br(memo.at(w.substr(0, s)), memo.at(w.substr(s))));
      }
    }
  }
  Elem acc = zero;
  for (size_t i = 0; i < coords.size(); ++i)
    if (coords[i] != 0) axpy(acc, coords[i], memo.at(basis.words[i]));
  return acc;
}

// Indices of the Lyndon basis elements of the weight layer whose count of
// `letter` is >= m (the multidegree realization of the depth filtration).
std::vector<int> depth_filtration_indices(int weight, int r, int letter, int m);

}  // namespace zetalie::freelie
