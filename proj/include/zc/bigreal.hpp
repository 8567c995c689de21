#pragma once

#include <mpfr.h>

#include <string>
#include <utility>

#include "zc/rational.hpp"

namespace zc {

/// Arbitrary-precision real scalar backed by MPFR.
///
/// Every value carries its own working precision (>= 64 bits) fixed at
/// construction. Binary operations allocate the result at the larger of the
/// two operand precisions, so arithmetic never silently downgrades.
/// Rounding mode is always to-nearest.
class BigReal {
 public:
  static constexpr mpfr_prec_t kMinPrec = 64;

  explicit BigReal(mpfr_prec_t prec = kMinPrec) {
    mpfr_init2(v_, clamp(prec));
    mpfr_set_zero(v_, 1);
  }
  BigReal(long value, mpfr_prec_t prec) {
    mpfr_init2(v_, clamp(prec));
    mpfr_set_si(v_, value, MPFR_RNDN);
  }
  BigReal(const Rational& value, mpfr_prec_t prec) {
    mpfr_init2(v_, clamp(prec));
    mpfr_set_q(v_, value.get_mpq_t(), MPFR_RNDN);
  }

  BigReal(const BigReal& other) {
    mpfr_init2(v_, other.prec());
    mpfr_set(v_, other.v_, MPFR_RNDN);
  }
  BigReal(BigReal&& other) noexcept {
    mpfr_init2(v_, kMinPrec);
    mpfr_swap(v_, other.v_);
  }
  BigReal& operator=(const BigReal& other) {
    if (this != &other) {
      mpfr_set_prec(v_, other.prec());
      mpfr_set(v_, other.v_, MPFR_RNDN);
    }
    return *this;
  }
  BigReal& operator=(BigReal&& other) noexcept {
    mpfr_swap(v_, other.v_);
    return *this;
  }
  ~BigReal() { mpfr_clear(v_); }

  static BigReal from_string(const std::string& text, mpfr_prec_t prec);
  static BigReal pi(mpfr_prec_t prec);
  /// 10^e at the given precision.
  static BigReal pow10(long e, mpfr_prec_t prec);
  /// 2^e, exact.
  static BigReal pow2(long e, mpfr_prec_t prec);

  mpfr_prec_t prec() const { return mpfr_get_prec(v_); }
  mpfr_srcptr raw() const { return v_; }
  mpfr_ptr raw() { return v_; }

  bool is_zero() const { return mpfr_zero_p(v_) != 0; }
  int sign() const { return mpfr_sgn(v_); }
  double to_double() const { return mpfr_get_d(v_, MPFR_RNDN); }
  mpz_class round_to_integer() const;

  /// Decimal rendering with `digits` significant digits; fixed notation for
  /// moderate exponents, scientific otherwise.
  std::string to_string(size_t digits) const;

  BigReal& operator+=(const BigReal& o);
  BigReal& operator-=(const BigReal& o);
  BigReal& operator*=(const BigReal& o);
  BigReal& operator/=(const BigReal& o);
  BigReal& operator*=(long s) {
    mpfr_mul_si(v_, v_, s, MPFR_RNDN);
    return *this;
  }
  BigReal& operator/=(long s) {
    mpfr_div_si(v_, v_, s, MPFR_RNDN);
    return *this;
  }

  friend BigReal operator+(const BigReal& a, const BigReal& b) { return binop(a, b, mpfr_add); }
  friend BigReal operator-(const BigReal& a, const BigReal& b) { return binop(a, b, mpfr_sub); }
  friend BigReal operator*(const BigReal& a, const BigReal& b) { return binop(a, b, mpfr_mul); }
  friend BigReal operator/(const BigReal& a, const BigReal& b) { return binop(a, b, mpfr_div); }

  friend BigReal operator+(const BigReal& a, long b);
  friend BigReal operator-(const BigReal& a, long b);
  friend BigReal operator*(const BigReal& a, long b);
  friend BigReal operator/(const BigReal& a, long b);
  friend BigReal operator+(long a, const BigReal& b) { return b + a; }
  friend BigReal operator-(long a, const BigReal& b);
  friend BigReal operator*(long a, const BigReal& b) { return b * a; }
  friend BigReal operator/(long a, const BigReal& b);

  BigReal operator-() const {
    BigReal r(prec());
    mpfr_neg(r.v_, v_, MPFR_RNDN);
    return r;
  }

  friend bool operator==(const BigReal& a, const BigReal& b) { return mpfr_cmp(a.v_, b.v_) == 0; }
  friend bool operator<(const BigReal& a, const BigReal& b) { return mpfr_cmp(a.v_, b.v_) < 0; }
  friend bool operator>(const BigReal& a, const BigReal& b) { return mpfr_cmp(a.v_, b.v_) > 0; }
  friend bool operator<=(const BigReal& a, const BigReal& b) { return mpfr_cmp(a.v_, b.v_) <= 0; }
  friend bool operator>=(const BigReal& a, const BigReal& b) { return mpfr_cmp(a.v_, b.v_) >= 0; }
  friend bool operator!=(const BigReal& a, const BigReal& b) { return mpfr_cmp(a.v_, b.v_) != 0; }

  friend bool operator<(const BigReal& a, long b) { return mpfr_cmp_si(a.v_, b) < 0; }
  friend bool operator>(const BigReal& a, long b) { return mpfr_cmp_si(a.v_, b) > 0; }
  friend bool operator==(const BigReal& a, long b) { return mpfr_cmp_si(a.v_, b) == 0; }

  friend BigReal abs(const BigReal& x) { return unop(x, mpfr_abs); }
  friend BigReal sqrt(const BigReal& x) { return unop(x, mpfr_sqrt); }
  friend BigReal log(const BigReal& x) { return unop(x, mpfr_log); }
  friend BigReal exp(const BigReal& x) { return unop(x, mpfr_exp); }
  friend BigReal expm1(const BigReal& x) { return unop(x, mpfr_expm1); }
  friend BigReal pow(const BigReal& x, const BigReal& y) { return binop(x, y, mpfr_pow); }
  friend BigReal max(const BigReal& a, const BigReal& b) { return a < b ? b : a; }

 private:
  static mpfr_prec_t clamp(mpfr_prec_t prec) { return prec < kMinPrec ? kMinPrec : prec; }

  using BinFn = int (*)(mpfr_ptr, mpfr_srcptr, mpfr_srcptr, mpfr_rnd_t);
  using UnFn = int (*)(mpfr_ptr, mpfr_srcptr, mpfr_rnd_t);

  static BigReal binop(const BigReal& a, const BigReal& b, BinFn fn) {
    BigReal r(std::max(a.prec(), b.prec()));
    fn(r.v_, a.v_, b.v_, MPFR_RNDN);
    return r;
  }
  static BigReal unop(const BigReal& x, UnFn fn) {
    BigReal r(x.prec());
    fn(r.v_, x.v_, MPFR_RNDN);
    return r;
  }

  mpfr_t v_;
};

}  // namespace zc
