#pragma once

#include <vector>

#include "zc/bigreal.hpp"

namespace zc {

/// Truncated bivariate power series in X and Y: coefficients for all (i, j)
/// with i + j <= order, every entry a BigReal of the series' precision.
/// Arithmetic truncates consistently at the common order.
class BivariateSeries {
 public:
  BivariateSeries(int order, mpfr_prec_t prec);

  static BivariateSeries constant(long value, int order, mpfr_prec_t prec);

  int order() const { return order_; }
  mpfr_prec_t prec() const { return prec_; }

  const BigReal& coeff(int i, int j) const { return c_[idx(i, j)]; }
  void set_coeff(int i, int j, const BigReal& v) { c_[idx(i, j)] = v; }
  void add_coeff(int i, int j, const BigReal& v) { c_[idx(i, j)] += v; }

  BivariateSeries& operator+=(const BivariateSeries& o);
  BivariateSeries& operator-=(const BivariateSeries& o);
  BivariateSeries& operator*=(const BigReal& s);
  BivariateSeries& operator/=(long s);
  friend BivariateSeries operator+(BivariateSeries a, const BivariateSeries& b) { return a += b; }
  friend BivariateSeries operator-(BivariateSeries a, const BivariateSeries& b) { return a -= b; }
  friend BivariateSeries operator*(const BivariateSeries& a, const BivariateSeries& b);

  BigReal max_abs() const;

 private:
  size_t idx(int i, int j) const;

  int order_;
  mpfr_prec_t prec_;
  std::vector<BigReal> c_;
};

/// exp of a series with zero constant term.
BivariateSeries exp_series(const BivariateSeries& s);

/// Multiplicative inverse of a series with constant term 1.
BivariateSeries inverse_one_plus(const BivariateSeries& s);

}  // namespace zc
