#include "zc/genfun.hpp"

#include <gmpxx.h>

#include "zc/parallel.hpp"
#include "zc/word.hpp"

namespace zc {

namespace {

constexpr mpfr_prec_t kSeriesGuard = 32;

/// X^a Y^b monomial with coefficient v.
BivariateSeries monomial(int a, int b, const BigReal& v, int order, mpfr_prec_t prec) {
  BivariateSeries s(order, prec);
  s.set_coeff(a, b, v);
  return s;
}

/// Core 2F1 series sum_{n>=0} (a)_n (b)_n / ((d)_n n!) z^n with
/// a = 1 - X, d = 1 - X - Y and b either 1 - Y (direct) or -X (Pfaff).
/// Term update from n-1 to n multiplies by
///   z * (n - X) * (b + n - 1) / ((n - X - Y) * n).
BivariateSeries hypergeometric_core(const Rational& z, bool pfaff_b, int order,
                                    mpfr_prec_t prec) {
  const mpfr_prec_t wp = prec + kSeriesGuard;
  const BigReal zb(z, wp);
  const BigReal eps = BigReal::pow2(-static_cast<long>(prec + 20), wp);
  BivariateSeries term = BivariateSeries::constant(1, order, wp);
  BivariateSeries sum = term;
  for (long n = 1;; ++n) {
    // numerator (n - X) * (b + n - 1)
    BivariateSeries num = monomial(0, 0, BigReal(n, wp), order, wp);
    num.add_coeff(1, 0, BigReal(-1, wp));
    BivariateSeries bfac(order, wp);
    if (pfaff_b) {
      bfac.set_coeff(0, 0, BigReal(n - 1, wp));  // b = -X
      bfac.add_coeff(1, 0, BigReal(-1, wp));
    } else {
      bfac.set_coeff(0, 0, BigReal(n, wp));  // b = 1 - Y
      bfac.add_coeff(0, 1, BigReal(-1, wp));
    }
    // denominator n * (n - X - Y) = n^2 * (1 - (X+Y)/n)
    BivariateSeries dfac(order, wp);
    dfac.set_coeff(0, 0, BigReal(1, wp));
    dfac.add_coeff(1, 0, BigReal(-1, wp) / n);
    dfac.add_coeff(0, 1, BigReal(-1, wp) / n);

    term = term * num;
    term = term * bfac;
    term = term * inverse_one_plus(dfac);
    term /= n * n;
    term *= zb;
    sum += term;
    if (n > order + 2 && term.max_abs() < eps) break;
    if (n > 200000) throw EvalError("hypergeometric series failed to converge");
  }
  return sum;
}

}  // namespace

BivariateSeries gamma_ratio_series(int order, mpfr_prec_t prec) {
  const mpfr_prec_t wp = prec + kSeriesGuard;
  BivariateSeries logratio(order, wp);
  mpz_class binom;
  for (int k = 2; k <= order; ++k) {
    BigReal zk = zeta(static_cast<unsigned>(k), wp) / k;
    logratio.add_coeff(k, 0, zk);
    logratio.add_coeff(0, k, zk);
    for (int i = 0; i <= k; ++i) {
      mpz_bin_uiui(binom.get_mpz_t(), static_cast<unsigned long>(k),
                   static_cast<unsigned long>(i));
      BigReal b(wp);
      mpfr_set_z(b.raw(), binom.get_mpz_t(), MPFR_RNDN);
      logratio.add_coeff(i, k - i, -(zk * b));
    }
  }
  return exp_series(logratio);
}

BivariateSeries hypergeometric_series(const Rational& c, int order, mpfr_prec_t prec) {
  if (!(c < 1)) throw EvalError("hypergeometric series needs c < 1");
  const mpfr_prec_t wp = prec + kSeriesGuard;
  if (c == 0) return BivariateSeries::constant(1, order, wp);
  if (c > Rational(-1, 2)) {
    return hypergeometric_core(c, /*pfaff_b=*/false, order, prec);
  }
  // Pfaff route: prefactor (1-c)^(-(1-X)) = (1-c)^-1 * exp(X log(1-c)).
  Rational zp = c / (c - 1);
  BivariateSeries f = hypergeometric_core(zp, /*pfaff_b=*/true, order, prec);
  BigReal log1mc = log(BigReal(Rational(1) - c, wp));
  BivariateSeries xlog(order, wp);
  xlog.set_coeff(1, 0, log1mc);
  f = f * exp_series(xlog);
  f *= 1 / BigReal(Rational(1) - c, wp);
  return f;
}

BivariateSeries lhs_series(const Rational& c, int order, mpfr_prec_t prec, unsigned jobs) {
  const mpfr_prec_t wp = prec + kSeriesGuard;
  BivariateSeries lhs = BivariateSeries::constant(1, order, wp);
  std::vector<std::pair<int, int>> slots;
  for (int m = 1; m <= order; ++m) {
    for (int n = 1; m + n <= order; ++n) slots.emplace_back(m, n);
  }
  std::vector<BigReal> values(slots.size(), BigReal(wp));
  parallel_for(slots.size(), jobs, [&](size_t k) {
    auto [m, n] = slots[k];
    Index idx;
    idx.parts.assign(static_cast<size_t>(n - 1), 1);
    idx.parts.push_back(m + 1);
    EvalConfig cfg;
    cfg.c = c;
    cfg.precision = wp;
    values[k] = evaluate_index(idx, cfg);
  });
  for (size_t k = 0; k < slots.size(); ++k) {
    lhs.set_coeff(slots[k].first, slots[k].second, -values[k]);
  }
  return lhs;
}

TheoremReport verify_theorem(const Rational& c, int order, mpfr_prec_t prec, unsigned jobs) {
  const mpfr_prec_t wp = prec + kSeriesGuard;
  BivariateSeries rhs = gamma_ratio_series(order, prec) * hypergeometric_series(c, order, prec);
  rhs *= BigReal(Rational(1) - c, wp);
  BivariateSeries lhs = lhs_series(c, order, prec, jobs);

  TheoremReport report;
  report.order = order;
  report.precision = prec;
  report.max_discrepancy = BigReal(wp);
  for (int i = 0; i <= order; ++i) {
    for (int j = 0; i + j <= order; ++j) {
      CoeffDiscrepancy d;
      d.i = i;
      d.j = j;
      d.lhs = lhs.coeff(i, j);
      d.rhs = rhs.coeff(i, j);
      d.abs_diff = abs(d.lhs - d.rhs);
      if (d.abs_diff > report.max_discrepancy) {
        report.max_discrepancy = d.abs_diff;
        report.worst_i = i;
        report.worst_j = j;
      }
      report.entries.push_back(std::move(d));
    }
  }
  return report;
}

}  // namespace zc
