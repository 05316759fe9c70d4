#include "zetalie/freelie.hpp"

#include <algorithm>
#include <mutex>
#include <sstream>
#include <stdexcept>

namespace zetalie::freelie {

bool is_lyndon(const Word& w) {
  if (w.empty()) return false;
  for (size_t i = 1; i < w.size(); ++i) {
    // w must be strictly smaller than the rotation starting at i; comparing
    // with the suffix is enough for the standard test w < w[i:] on suffixes.
    if (!(w < w.substr(i) + w.substr(0, i))) return false;
  }
  return true;
}

std::vector<Word> lyndon_words(int weight, int r) {
  std::vector<Word> out;
  if (weight < 1 || r < 1) return out;
  std::string w(1, '\0');
  while (true) {
    if (static_cast<int>(w.size()) == weight) out.emplace_back(w);
    int m = static_cast<int>(w.size());
    while (static_cast<int>(w.size()) < weight) w.push_back(w[w.size() - m]);
    while (!w.empty() && w.back() == static_cast<char>(r - 1)) w.pop_back();
    if (w.empty()) break;
    w.back() = static_cast<char>(w.back() + 1);
  }
  return out;
}

uint64_t count_lyndon_words(int weight, int r) {
  uint64_t count = 0;
  std::string w(1, '\0');
  while (true) {
    if (static_cast<int>(w.size()) == weight) ++count;
    int m = static_cast<int>(w.size());
    while (static_cast<int>(w.size()) < weight) w.push_back(w[w.size() - m]);
    while (!w.empty() && w.back() == static_cast<char>(r - 1)) w.pop_back();
    if (w.empty()) break;
    w.back() = static_cast<char>(w.back() + 1);
  }
  return count;
}

namespace {
int moebius(int n) {
  int mu = 1;
  for (int p = 2; p * p <= n; ++p) {
    if (n % p == 0) {
      n /= p;
      if (n % p == 0) return 0;
      mu = -mu;
    }
  }
  if (n > 1) mu = -mu;
  return mu;
}

uint64_t upow(uint64_t b, int e) {
  uint64_t r = 1;
  while (e-- > 0) r = checked_mul(static_cast<int64_t>(r), static_cast<int64_t>(b));
  return r;
}
}  // namespace

uint64_t witt_dimension(int weight, int r) {
  int64_t acc = 0;
  for (int d = 1; d <= weight; ++d) {
    if (weight % d != 0) continue;
    int mu = moebius(d);
    if (mu == 0) continue;
    acc = checked_add(acc, mu * static_cast<int64_t>(upow(r, weight / d)));
  }
  return static_cast<uint64_t>(acc / weight);
}

int std_factorization(const Word& w) {
  if (w.size() < 2) return 0;
  // longest proper Lyndon suffix
  for (size_t i = 1; i < w.size(); ++i)
    if (is_lyndon(w.substr(i))) return static_cast<int>(i);
  throw std::logic_error("std_factorization: not a Lyndon word");
}

namespace {
IntPoly int_add(const IntPoly& a, const IntPoly& b, int64_t s) {
  IntPoly out;
  out.reserve(a.size() + b.size());
  size_t i = 0, j = 0;
  while (i < a.size() || j < b.size()) {
    if (j == b.size() || (i < a.size() && a[i].first < b[j].first)) {
      out.push_back(a[i++]);
    } else if (i == a.size() || b[j].first < a[i].first) {
      out.emplace_back(b[j].first, checked_mul(s, b[j].second));
      ++j;
    } else {
      int64_t c = checked_madd(a[i].second, s, b[j].second);
      if (c != 0) out.emplace_back(a[i].first, c);
      ++i;
      ++j;
    }
  }
  return out;
}

IntPoly int_mul(const IntPoly& a, const IntPoly& b) {
  std::map<Word, int64_t> acc;
  for (const auto& [wa, ca] : a)
    for (const auto& [wb, cb] : b) {
      int64_t& slot = acc[wa + wb];
      slot = checked_madd(slot, ca, cb);
    }
  IntPoly out;
  out.reserve(acc.size());
  for (auto& [w, c] : acc)
    if (c != 0) out.emplace_back(w, c);
  return out;
}

IntPoly int_bracket(const IntPoly& a, const IntPoly& b) {
  return int_add(int_mul(a, b), int_mul(b, a), -1);
}
}  // namespace

IntPoly bracketing_expansion(const Word& lyndon) {
  if (lyndon.size() == 1) return {{lyndon, 1}};
  int s = std_factorization(lyndon);
  return int_bracket(bracketing_expansion(lyndon.substr(0, s)),
                     bracketing_expansion(lyndon.substr(s)));
}

void nc_add_inplace(NcPoly& a, const NcPoly& b, const Rat& scale) {
  if (scale == 0) return;
  for (const auto& [w, c] : b) {
    Rat& slot = a[w];
    slot += c * scale;
    if (slot == 0) a.erase(w);
  }
}

NcPoly nc_mul(const NcPoly& a, const NcPoly& b) {
  NcPoly out;
  for (const auto& [wa, ca] : a)
    for (const auto& [wb, cb] : b) {
      Rat& slot = out[wa + wb];
      slot += ca * cb;
      if (slot == 0) out.erase(wa + wb);
    }
  return out;
}

NcPoly nc_bracket(const NcPoly& a, const NcPoly& b) {
  NcPoly out = nc_mul(a, b);
  nc_add_inplace(out, nc_mul(b, a), Rat(-1));
  return out;
}

NcPoly from_int_poly(const IntPoly& p, const Rat& scale) {
  NcPoly out;
  if (scale == 0) return out;
  for (const auto& [w, c] : p) out.emplace(w, Rat(static_cast<long>(c)) * scale);
  return out;
}

const LyndonBasis& LyndonBasis::get(int weight, int r) {
  static std::mutex mu;
  static std::map<std::pair<int, int>, LyndonBasis> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto key = std::make_pair(weight, r);
  auto it = cache.find(key);
  if (it != cache.end()) return it->second;
  LyndonBasis b;
  b.weight = weight;
  b.letters = r;
  b.words = lyndon_words(weight, r);
  b.split.reserve(b.words.size());
  b.expansion.reserve(b.words.size());
  for (size_t i = 0; i < b.words.size(); ++i) {
    b.split.push_back(b.words[i].size() > 1 ? std_factorization(b.words[i]) : 0);
    b.expansion.push_back(bracketing_expansion(b.words[i]));
    b.index.emplace(b.words[i], static_cast<int>(i));
  }
  return cache.emplace(key, std::move(b)).first->second;
}

std::vector<Rat> lyndon_coords(const NcPoly& f, int weight, int r) {
  const auto& basis = LyndonBasis::get(weight, r);
  std::vector<Rat> coords(basis.words.size(), Rat(0));
  NcPoly rem = f;
  for (const auto& [w, c] : rem) {
    if (static_cast<int>(w.size()) != weight)
      throw std::invalid_argument("lyndon_coords: element not homogeneous of the given weight");
    for (char l : w)
      if (static_cast<unsigned char>(l) >= static_cast<unsigned>(r))
        throw std::invalid_argument("lyndon_coords: letter outside alphabet");
  }
  while (!rem.empty()) {
    const Word& lead = rem.begin()->first;
    auto it = basis.index.find(lead);
    if (it == basis.index.end())
      throw NotLieElement("leading word is not Lyndon: remainder is not a Lie element");
    int idx = it->second;
    // standard bracketings are triangular in their leading (smallest) word
    const auto& exp = basis.expansion[idx];
    if (exp.front().first != lead)
      throw std::logic_error("lyndon_coords: expansion lost triangularity");
    Rat c = rem.begin()->second / Rat(static_cast<long>(exp.front().second));
    coords[idx] = c;
    nc_add_inplace(rem, from_int_poly(exp), -c);
  }
  return coords;
}

NcPoly from_lyndon_coords(const std::vector<Rat>& coords, int weight, int r) {
  const auto& basis = LyndonBasis::get(weight, r);
  NcPoly out;
  for (size_t i = 0; i < coords.size() && i < basis.words.size(); ++i)
    if (coords[i] != 0) nc_add_inplace(out, from_int_poly(basis.expansion[i]), coords[i]);
  return out;
}

LiePoly::LiePoly(std::vector<std::string> alphabet, NcPoly terms)
    : alphabet_(std::move(alphabet)), terms_(std::move(terms)) {
  for (const auto& [w, c] : terms_) {
    if (w.empty()) throw std::invalid_argument("LiePoly: weight-0 terms are not allowed");
    (void)c;
  }
}

LiePoly LiePoly::generator(const std::vector<std::string>& alphabet, int letter) {
  NcPoly t;
  t.emplace(Word(1, static_cast<char>(letter)), Rat(1));
  return LiePoly(alphabet, std::move(t));
}

LiePoly LiePoly::zero(const std::vector<std::string>& alphabet) {
  return LiePoly(alphabet, NcPoly{});
}

bool LiePoly::is_homogeneous(int* weight_out) const {
  if (terms_.empty()) return true;
  size_t w = terms_.begin()->first.size();
  for (const auto& [word, c] : terms_)
    if (word.size() != w) return false;
  if (weight_out) *weight_out = static_cast<int>(w);
  return true;
}

std::vector<int> LiePoly::multidegree(const Word& w, int r) {
  std::vector<int> d(r, 0);
  for (char l : w) d[static_cast<unsigned char>(l)]++;
  return d;
}

LiePoly operator+(const LiePoly& a, const LiePoly& b) {
  if (a.alphabet_ != b.alphabet_) throw std::invalid_argument("LiePoly: alphabet mismatch");
  NcPoly t = a.terms_;
  nc_add_inplace(t, b.terms_);
  return LiePoly(a.alphabet_, std::move(t));
}

LiePoly operator-(const LiePoly& a, const LiePoly& b) {
  if (a.alphabet_ != b.alphabet_) throw std::invalid_argument("LiePoly: alphabet mismatch");
  NcPoly t = a.terms_;
  nc_add_inplace(t, b.terms_, Rat(-1));
  return LiePoly(a.alphabet_, std::move(t));
}

LiePoly LiePoly::operator*(const Rat& s) const {
  NcPoly t;
  if (s != 0)
    for (const auto& [w, c] : terms_) t.emplace(w, c * s);
  return LiePoly(alphabet_, std::move(t));
}

LiePoly bracket(const LiePoly& a, const LiePoly& b) {
  if (a.alphabet_ != b.alphabet_) throw std::invalid_argument("LiePoly: alphabet mismatch");
  return LiePoly(a.alphabet_, nc_bracket(a.terms_, b.terms_));
}

std::vector<Rat> LiePoly::lyndon_coordinates(int weight) const {
  return lyndon_coords(terms_, weight, static_cast<int>(alphabet_.size()));
}

std::string LiePoly::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [w, c] : terms_) {
    if (!first) os << " + ";
    first = false;
    os << rat_to_string(c) << "*";
    for (char l : w) os << alphabet_[static_cast<unsigned char>(l)];
  }
  return os.str();
}

std::vector<int> depth_filtration_indices(int weight, int r, int letter, int m) {
  const auto& basis = LyndonBasis::get(weight, r);
  std::vector<int> out;
  for (size_t i = 0; i < basis.words.size(); ++i) {
    int cnt = static_cast<int>(
        std::count(basis.words[i].begin(), basis.words[i].end(), static_cast<char>(letter)));
    if (cnt >= m) out.push_back(static_cast<int>(i));
  }
  return out;
}

}  // namespace zetalie::freelie
