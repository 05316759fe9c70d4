#pragma once

#include <gmpxx.h>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace zetalie {

using Rat = mpq_class;
using Int = mpz_class;

struct OverflowError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct ResourceError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct NotLieElement : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Checked int64 arithmetic for the hot exact-integer kernels. Everything
// downstream of these arrays is verified exactly, so an overflow must abort
// the computation rather than wrap.
inline int64_t checked_add(int64_t a, int64_t b) {
  int64_t r;
  if (__builtin_add_overflow(a, b, &r)) throw OverflowError("int64 add overflow");
  return r;
}

inline int64_t checked_mul(int64_t a, int64_t b) {
  int64_t r;
  if (__builtin_mul_overflow(a, b, &r)) throw OverflowError("int64 mul overflow");
  return r;
}

inline int64_t checked_madd(int64_t acc, int64_t a, int64_t b) {
  return checked_add(acc, checked_mul(a, b));
}

inline std::string rat_to_string(const Rat& q) { return q.get_str(); }

inline Rat rat_from_string(const std::string& s) {
  Rat q;
  if (q.set_str(s, 10) != 0) throw std::invalid_argument("bad rational literal: " + s);
  q.canonicalize();
  return q;
}

// Scale a rational vector to a primitive integer vector (gcd 1). Returns the
// integer vector; sign chosen so the first nonzero entry is positive.
inline std::vector<Int> primitive_integer_vector(const std::vector<Rat>& v) {
  Int lcm = 1;
  for (const auto& q : v)
    if (q != 0) mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), q.get_den().get_mpz_t());
  std::vector<Int> out(v.size());
  Int g = 0;
  for (size_t i = 0; i < v.size(); ++i) {
    out[i] = Int(v[i] * lcm);
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), out[i].get_mpz_t());
  }
  if (g > 1)
    for (auto& x : out) x /= g;
  for (const auto& x : out) {
    if (x != 0) {
      if (x < 0)
        for (auto& y : out) y = -y;
      break;
    }
  }
  return out;
}

}  // namespace zetalie
