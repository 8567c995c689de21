#pragma once

#include <vector>

#include "zc/bivariate.hpp"
#include "zc/rational.hpp"
#include "zc/series_eval.hpp"

namespace zc {

/// Series of Gamma(1-X) Gamma(1-Y) / Gamma(1-X-Y): the Euler-Mascheroni
/// terms cancel in the ratio, so the log expansion only needs zeta values,
/// exp(sum_{k>=2} (zeta(k)/k) (X^k + Y^k - (X+Y)^k)).
BivariateSeries gamma_ratio_series(int order, mpfr_prec_t prec);

/// 2F1(1-X, 1-Y; 1-X-Y; c) as a truncated bivariate series. For c < -1/2 the
/// raw series converges slowly or not at all, so the Pfaff transformation
/// 2F1(a,b;d;z) = (1-z)^(-a) 2F1(a, d-b; d; z/(z-1)) is applied, which maps
/// the argument into (0, 1) (c = -1 lands on 1/2).
BivariateSeries hypergeometric_series(const Rational& c, int order, mpfr_prec_t prec);

/// Left-hand generating series: constant term 1, coefficient of X^m Y^n for
/// m, n >= 1 equal to -Z_c(1,...,1,m+1) with n-1 leading ones; all other
/// border coefficients zero.
BivariateSeries lhs_series(const Rational& c, int order, mpfr_prec_t prec, unsigned jobs = 1);

struct CoeffDiscrepancy {
  int i = 0, j = 0;
  BigReal lhs, rhs, abs_diff;
};

struct TheoremReport {
  int order = 0;
  mpfr_prec_t precision = 0;
  std::vector<CoeffDiscrepancy> entries;  // all (i,j) with i+j <= order
  BigReal max_discrepancy;
  int worst_i = 0, worst_j = 0;

  bool passes(const BigReal& tolerance) const { return max_discrepancy < tolerance; }
};

/// Checks the generating-series identity
///   1 - sum Z_c(1,...,1,m+1) X^m Y^n = (1-c) * Gamma-ratio * 2F1
/// coefficient-wise at a fixed numeric c, reporting every discrepancy.
TheoremReport verify_theorem(const Rational& c, int order, mpfr_prec_t prec, unsigned jobs = 1);

}  // namespace zc
