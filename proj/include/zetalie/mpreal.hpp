#pragma once

#include <mpfr.h>

#include <cmath>
#include <cstdint>
#include <string>
#include <utility>

#include "zetalie/rational.hpp"

namespace zetalie {

// Thin RAII wrapper over mpfr_t. Precision is carried per value; binary
// operations use the larger operand precision.
class MpReal {
 public:
  MpReal() { mpfr_init2(v_, 64); mpfr_set_zero(v_, 1); }
  explicit MpReal(mpfr_prec_t prec) { mpfr_init2(v_, prec); mpfr_set_zero(v_, 1); }
  MpReal(long x, mpfr_prec_t prec) { mpfr_init2(v_, prec); mpfr_set_si(v_, x, MPFR_RNDN); }
  MpReal(double x, mpfr_prec_t prec) { mpfr_init2(v_, prec); mpfr_set_d(v_, x, MPFR_RNDN); }
  MpReal(const Rat& q, mpfr_prec_t prec) {
    mpfr_init2(v_, prec);
    mpfr_set_q(v_, q.get_mpq_t(), MPFR_RNDN);
  }
  MpReal(const Int& z, mpfr_prec_t prec) {
    mpfr_init2(v_, prec);
    mpfr_set_z(v_, z.get_mpz_t(), MPFR_RNDN);
  }
  MpReal(const MpReal& o) { mpfr_init2(v_, mpfr_get_prec(o.v_)); mpfr_set(v_, o.v_, MPFR_RNDN); }
  MpReal(MpReal&& o) noexcept { mpfr_init2(v_, 64); mpfr_swap(v_, o.v_); }
  MpReal& operator=(const MpReal& o) {
    if (this != &o) {
      mpfr_set_prec(v_, mpfr_get_prec(o.v_));
      mpfr_set(v_, o.v_, MPFR_RNDN);
    }
    return *this;
  }
  MpReal& operator=(MpReal&& o) noexcept {
    if (this != &o) mpfr_swap(v_, o.v_);
    return *this;
  }
  ~MpReal() { mpfr_clear(v_); }

  mpfr_prec_t prec() const { return mpfr_get_prec(v_); }
  mpfr_ptr raw() { return v_; }
  mpfr_srcptr raw() const { return v_; }

  static mpfr_prec_t bits_for_digits(long digits) {
    return static_cast<mpfr_prec_t>(std::ceil(digits * 3.3219280948873623)) + 16;
  }

  static MpReal pi(mpfr_prec_t prec) {
    MpReal r(prec);
    mpfr_const_pi(r.v_, MPFR_RNDN);
    return r;
  }

  friend MpReal operator+(const MpReal& a, const MpReal& b) {
    MpReal r(std::max(a.prec(), b.prec()));
    mpfr_add(r.v_, a.v_, b.v_, MPFR_RNDN);
    return r;
  }
  friend MpReal operator-(const MpReal& a, const MpReal& b) {
    MpReal r(std::max(a.prec(), b.prec()));
    mpfr_sub(r.v_, a.v_, b.v_, MPFR_RNDN);
    return r;
  }
  friend MpReal operator*(const MpReal& a, const MpReal& b) {
    MpReal r(std::max(a.prec(), b.prec()));
    mpfr_mul(r.v_, a.v_, b.v_, MPFR_RNDN);
    return r;
  }
  friend MpReal operator/(const MpReal& a, const MpReal& b) {
    MpReal r(std::max(a.prec(), b.prec()));
    mpfr_div(r.v_, a.v_, b.v_, MPFR_RNDN);
    return r;
  }
  MpReal operator-() const {
    MpReal r(prec());
    mpfr_neg(r.v_, v_, MPFR_RNDN);
    return r;
  }
  MpReal& operator+=(const MpReal& o) { mpfr_add(v_, v_, o.v_, MPFR_RNDN); return *this; }
  MpReal& operator-=(const MpReal& o) { mpfr_sub(v_, v_, o.v_, MPFR_RNDN); return *this; }
  MpReal& operator*=(const MpReal& o) { mpfr_mul(v_, v_, o.v_, MPFR_RNDN); return *this; }
  MpReal& operator/=(const MpReal& o) { mpfr_div(v_, v_, o.v_, MPFR_RNDN); return *this; }

  MpReal& mul_si(long s) { mpfr_mul_si(v_, v_, s, MPFR_RNDN); return *this; }
  MpReal& div_si(long s) { mpfr_div_si(v_, v_, s, MPFR_RNDN); return *this; }
  MpReal& addmul(const MpReal& a, const MpReal& b) {
    mpfr_fma(v_, a.v_, b.v_, v_, MPFR_RNDN);
    return *this;
  }

  MpReal abs() const {
    MpReal r(prec());
    mpfr_abs(r.v_, v_, MPFR_RNDN);
    return r;
  }
  MpReal sqrt() const {
    MpReal r(prec());
    mpfr_sqrt(r.v_, v_, MPFR_RNDN);
    return r;
  }
  MpReal pow_ui(unsigned long e) const {
    MpReal r(prec());
    mpfr_pow_ui(r.v_, v_, e, MPFR_RNDN);
    return r;
  }
  MpReal round() const {
    MpReal r(prec());
    mpfr_round(r.v_, v_);
    return r;
  }
  Int to_int_round() const {
    Int z;
    mpfr_get_z(z.get_mpz_t(), v_, MPFR_RNDN);
    return z;
  }

  bool is_zero() const { return mpfr_zero_p(v_); }
  int sign() const { return mpfr_sgn(v_); }
  double to_double() const { return mpfr_get_d(v_, MPFR_RNDN); }
  friend bool operator<(const MpReal& a, const MpReal& b) { return mpfr_cmp(a.v_, b.v_) < 0; }
  friend bool operator>(const MpReal& a, const MpReal& b) { return mpfr_cmp(a.v_, b.v_) > 0; }
  friend bool operator<=(const MpReal& a, const MpReal& b) { return mpfr_cmp(a.v_, b.v_) <= 0; }
  friend bool operator>=(const MpReal& a, const MpReal& b) { return mpfr_cmp(a.v_, b.v_) >= 0; }

  // 10^e at this value's precision
  static MpReal pow10(long e, mpfr_prec_t prec) {
    MpReal r(prec);
    mpfr_set_si(r.v_, 10, MPFR_RNDN);
    mpfr_pow_si(r.v_, r.v_, e, MPFR_RNDN);
    return r;
  }

  // Deterministic decimal string with the given number of significant digits.
  std::string to_string(long digits) const {
    if (mpfr_zero_p(v_)) return "0";
    mpfr_exp_t e;
    char* s = mpfr_get_str(nullptr, &e, 10, digits, v_, MPFR_RNDN);
    std::string mant(s);
    mpfr_free_str(s);
    bool neg = !mant.empty() && mant[0] == '-';
    std::string d = neg ? mant.substr(1) : mant;
    std::string out = (neg ? "-" : "");
    out += d.substr(0, 1) + "." + d.substr(1) + "e" + std::to_string(e - 1);
    return out;
  }

 private:
  mpfr_t v_;
};

struct MpComplex {
  MpReal re, im;

  MpComplex() = default;
  explicit MpComplex(mpfr_prec_t prec) : re(prec), im(prec) {}
  MpComplex(MpReal r, MpReal i) : re(std::move(r)), im(std::move(i)) {}

  friend MpComplex operator+(const MpComplex& a, const MpComplex& b) {
    return {a.re + b.re, a.im + b.im};
  }
  friend MpComplex operator-(const MpComplex& a, const MpComplex& b) {
    return {a.re - b.re, a.im - b.im};
  }
  friend MpComplex operator*(const MpComplex& a, const MpComplex& b) {
    return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
  }
  MpComplex operator-() const { return {-re, -im}; }
  MpComplex& operator+=(const MpComplex& o) {
    re += o.re;
    im += o.im;
    return *this;
  }
  MpReal abs() const { return (re * re + im * im).sqrt(); }
};

}  // namespace zetalie
