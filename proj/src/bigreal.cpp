#include "zc/bigreal.hpp"

#include <stdexcept>

namespace zc {

BigReal BigReal::from_string(const std::string& text, mpfr_prec_t prec) {
  BigReal r(prec);
  if (mpfr_set_str(r.v_, text.c_str(), 10, MPFR_RNDN) != 0) {
    throw std::invalid_argument("malformed real literal '" + text + "'");
  }
  return r;
}

BigReal BigReal::pi(mpfr_prec_t prec) {
  BigReal r(prec);
  mpfr_const_pi(r.v_, MPFR_RNDN);
  return r;
}

BigReal BigReal::pow10(long e, mpfr_prec_t prec) {
  BigReal r(prec);
  mpfr_ui_pow_ui(r.v_, 10, static_cast<unsigned long>(e >= 0 ? e : -e), MPFR_RNDN);
  if (e < 0) mpfr_si_div(r.v_, 1, r.v_, MPFR_RNDN);
  return r;
}

BigReal BigReal::pow2(long e, mpfr_prec_t prec) {
  BigReal r(prec);
  mpfr_set_si_2exp(r.v_, 1, e, MPFR_RNDN);
  return r;
}

mpz_class BigReal::round_to_integer() const {
  mpz_class z;
  mpfr_get_z(z.get_mpz_t(), v_, MPFR_RNDN);
  return z;
}

std::string BigReal::to_string(size_t digits) const {
  if (digits < 2) digits = 2;
  if (is_zero()) return "0";
  mpfr_exp_t expo = 0;
  char* raw = mpfr_get_str(nullptr, &expo, 10, digits, v_, MPFR_RNDN);
  std::string mant(raw);
  mpfr_free_str(raw);

  bool neg = !mant.empty() && mant[0] == '-';
  std::string d = neg ? mant.substr(1) : mant;
  // Strip trailing zeros but keep at least one digit.
  size_t last = d.find_last_not_of('0');
  d = d.substr(0, last == std::string::npos ? 1 : last + 1);

  std::string out;
  long e = static_cast<long>(expo);  // value = 0.d * 10^e
  if (e >= 1 && e <= static_cast<long>(digits)) {
    if (static_cast<size_t>(e) >= d.size()) {
      out = d + std::string(static_cast<size_t>(e) - d.size(), '0');
    } else {
      out = d.substr(0, static_cast<size_t>(e)) + "." + d.substr(static_cast<size_t>(e));
    }
  } else if (e <= 0 && e >= -4) {
    out = "0." + std::string(static_cast<size_t>(-e), '0') + d;
  } else {
    out = d.substr(0, 1);
    if (d.size() > 1) out += "." + d.substr(1);
    out += "e" + std::to_string(e - 1);
  }
  return neg ? "-" + out : out;
}

BigReal& BigReal::operator+=(const BigReal& o) {
  if (o.prec() > prec()) mpfr_prec_round(v_, o.prec(), MPFR_RNDN);
  mpfr_add(v_, v_, o.v_, MPFR_RNDN);
  return *this;
}
BigReal& BigReal::operator-=(const BigReal& o) {
  if (o.prec() > prec()) mpfr_prec_round(v_, o.prec(), MPFR_RNDN);
  mpfr_sub(v_, v_, o.v_, MPFR_RNDN);
  return *this;
}
BigReal& BigReal::operator*=(const BigReal& o) {
  if (o.prec() > prec()) mpfr_prec_round(v_, o.prec(), MPFR_RNDN);
  mpfr_mul(v_, v_, o.v_, MPFR_RNDN);
  return *this;
}
BigReal& BigReal::operator/=(const BigReal& o) {
  if (o.prec() > prec()) mpfr_prec_round(v_, o.prec(), MPFR_RNDN);
  mpfr_div(v_, v_, o.v_, MPFR_RNDN);
  return *this;
}

BigReal operator+(const BigReal& a, long b) {
  BigReal r(a.prec());
  mpfr_add_si(r.v_, a.v_, b, MPFR_RNDN);
  return r;
}
BigReal operator-(const BigReal& a, long b) {
  BigReal r(a.prec());
  mpfr_sub_si(r.v_, a.v_, b, MPFR_RNDN);
  return r;
}
BigReal operator*(const BigReal& a, long b) {
  BigReal r(a.prec());
  mpfr_mul_si(r.v_, a.v_, b, MPFR_RNDN);
  return r;
}
BigReal operator/(const BigReal& a, long b) {
  BigReal r(a.prec());
  mpfr_div_si(r.v_, a.v_, b, MPFR_RNDN);
  return r;
}
BigReal operator-(long a, const BigReal& b) {
  BigReal r(b.prec());
  mpfr_si_sub(r.v_, a, b.v_, MPFR_RNDN);
  return r;
}
BigReal operator/(long a, const BigReal& b) {
  BigReal r(b.prec());
  mpfr_si_div(r.v_, a, b.v_, MPFR_RNDN);
  return r;
}

}  // namespace zc
