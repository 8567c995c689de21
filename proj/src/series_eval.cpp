#include "zc/series_eval.hpp"

#include <cmath>

namespace zc {

namespace {

constexpr mpfr_prec_t kGuardBits = 64;

/// Incrementally maintained Taylor coefficients of a prefix integral F_u.
/// Appending an outer letter 0 divides each coefficient by its order;
/// appending an outer letter 1 multiplies by the omega_1 coefficient series
/// (two geometric convolutions, each a linear-time running sum) and
/// integrates term by term.
class PrefixSeries {
 public:
  PrefixSeries(const Rational& c, int order, mpfr_prec_t prec)
      : c_(c, prec), prec_(prec), a_(static_cast<size_t>(order) + 1, BigReal(prec)) {
    a_[0] = BigReal(1, prec);
  }

  void push_letter(int letter) {
    const int n = static_cast<int>(a_.size()) - 1;
    if (letter == 0) {
      if (!a_[0].is_zero()) throw EvalError("word with innermost letter 0 diverges at 0");
      for (int k = 1; k <= n; ++k) a_[k] /= k;
      return;
    }
    // g tracks (F/(1-t))_{k-1}, h tracks (F/(1-ct))_{k-1}.
    BigReal g(prec_), h(prec_), orig = a_[0];
    for (int k = 1; k <= n; ++k) {
      g += orig;
      h = h * c_ + orig;
      orig = a_[k];
      a_[k] = (g - c_ * h) / k;
    }
    a_[0] = BigReal(prec_);
  }

  BigReal eval(const BigReal& x) const {
    BigReal sum = a_[0], xn(1, prec_);
    for (size_t k = 1; k < a_.size(); ++k) {
      xn *= x;
      sum += a_[k] * xn;
    }
    return sum;
  }

  /// Geometric bound on the dropped tail: |a_N| x^(N+1) / (1 - x).
  BigReal tail_estimate(const BigReal& x) const {
    const long n = static_cast<long>(a_.size()) - 1;
    return abs(a_.back()) * pow(x, BigReal(n + 1, prec_)) / (1 - x);
  }

  const std::vector<BigReal>& coeffs() const { return a_; }

 private:
  BigReal c_;
  mpfr_prec_t prec_;
  std::vector<BigReal> a_;
};

struct CutPoints {
  BigReal p;       // cut in (0,1)
  BigReal pprime;  // involution image (p-1)/(cp-1)
};

CutPoints cut_points(const EvalConfig& cfg, mpfr_prec_t wp) {
  if (!cfg.cut) {
    BigReal p = fixed_point(cfg.c, wp);
    return {p, p};
  }
  const Rational& p = *cfg.cut;
  if (!(p > 0 && p < 1)) {
    throw EvalError("cut point " + format_rational(p) + " outside (0,1)");
  }
  Rational pp = (p - 1) / (cfg.c * p - 1);
  return {BigReal(p, wp), BigReal(pp, wp)};
}

/// One full path-composition evaluation at truncation order `order`.
/// Returns the value and the worst geometric tail estimate across the
/// series involved.
std::pair<BigReal, BigReal> evaluate_at_order(const Word& w, const EvalConfig& cfg, int order,
                                              const CutPoints& cut, mpfr_prec_t wp) {
  const int k = w.size();
  // Prefix pass: F of w's prefixes, evaluated at p.
  std::vector<BigReal> left(static_cast<size_t>(k) + 1, BigReal(wp));
  left[0] = BigReal(1, wp);
  BigReal tail(wp);
  {
    PrefixSeries ser(cfg.c, order, wp);
    for (int i = 0; i < k; ++i) {
      ser.push_letter(w.letter(i));
      left[static_cast<size_t>(i) + 1] = ser.eval(cut.p);
    }
    tail = ser.tail_estimate(cut.p);
  }
  // Dual pass: the tail piece over [p,1] transforms into the prefix integral
  // of the reversed complement over [0,p']; building it letter by letter from
  // the outer end of w walks through the duals of all suffixes.
  std::vector<BigReal> right(static_cast<size_t>(k) + 1, BigReal(wp));
  right[static_cast<size_t>(k)] = BigReal(1, wp);
  {
    PrefixSeries ser(cfg.c, order, wp);
    for (int i = k - 1; i >= 0; --i) {
      ser.push_letter(1 - w.letter(i));
      right[static_cast<size_t>(i)] = ser.eval(cut.pprime);
    }
    tail = max(tail, ser.tail_estimate(cut.pprime));
  }
  BigReal sum(wp);
  for (int j = 0; j <= k; ++j) {
    sum += left[static_cast<size_t>(j)] * right[static_cast<size_t>(j)];
  }
  return {sum, tail};
}

}  // namespace

BigReal PowerSeries::eval(const BigReal& x) const {
  BigReal sum = constant, xn(1, x.prec());
  for (const BigReal& a : coeffs) {
    xn *= x;
    sum += a * xn;
  }
  return sum;
}

std::vector<BigReal> omega1_coefficients(const Rational& c, int count, mpfr_prec_t prec) {
  std::vector<BigReal> out;
  out.reserve(static_cast<size_t>(count));
  BigReal cb(c, prec), cpow(1, prec);
  for (int m = 0; m < count; ++m) {
    cpow *= cb;
    out.push_back(1 - cpow);
  }
  return out;
}

PowerSeries series_for_word(const Word& u, const Rational& c, int order, mpfr_prec_t prec) {
  if (u.empty()) throw EvalError("series_for_word needs a nonempty word");
  if (u.letter(0) != 1) throw EvalError("word with innermost letter 0 diverges at 0");
  if (order < 1) throw EvalError("series order must be >= 1");
  PrefixSeries ser(c, order, prec);
  for (int i = 0; i < u.size(); ++i) ser.push_letter(u.letter(i));
  PowerSeries out;
  out.constant = ser.coeffs()[0];
  out.coeffs.assign(ser.coeffs().begin() + 1, ser.coeffs().end());
  return out;
}

BigReal fixed_point(const Rational& c, mpfr_prec_t prec) {
  if (!(c < 1)) throw EvalError("fixed point requires c < 1");
  return 1 / (1 + sqrt(BigReal(Rational(1) - c, prec)));
}

BigReal evaluate_word(const Word& w, const EvalConfig& cfg) {
  if (w.empty() || !w.admissible()) {
    throw EvalError("word '" + w.str() + "' is not a nonempty admissible word");
  }
  if (!(cfg.c < 1)) throw EvalError("parameter c must satisfy c < 1");
  if (cfg.c > cfg.c_max) {
    throw EvalError("c = " + format_rational(cfg.c) + " exceeds the supported maximum " +
                    format_rational(cfg.c_max) + " (convergence degrades as c -> 1)");
  }

  const mpfr_prec_t wp = cfg.precision + kGuardBits;
  CutPoints cut = cut_points(cfg, wp);
  if (cfg.warn && (cut.p.to_double() > 0.8 || cut.pprime.to_double() > 0.8)) {
    cfg.warn("cut point above 0.8; expect slow convergence (c = " + format_rational(cfg.c) + ")");
  }

  // Both expansion points must sit strictly inside the series' disc of
  // convergence, whose radius is min(1, 1/|c|).
  const double cd = std::abs(Rational(cfg.c).get_d());
  const double q = std::max(cut.p.to_double(), cut.pprime.to_double()) * std::max(1.0, cd);
  if (!(q < 0.98)) {
    throw EvalError("series evaluation point too close to the radius of convergence (q = " +
                    std::to_string(q) + "); this c/cut combination is unsupported");
  }

  const BigReal threshold = BigReal::pow2(-static_cast<long>(cfg.precision + 10), wp);
  long order = static_cast<long>(std::ceil(static_cast<double>(cfg.precision + 24) /
                                           -std::log2(q))) + 8;
  if (order < 32) order = 32;

  auto [value, tail] = evaluate_at_order(w, cfg, static_cast<int>(order), cut, wp);
  while (true) {
    if (2 * order > cfg.max_terms) {
      throw EvalError("truncation failed to converge within " + std::to_string(cfg.max_terms) +
                      " terms for word '" + w.str() + "'");
    }
    auto [value2, tail2] = evaluate_at_order(w, cfg, static_cast<int>(2 * order), cut, wp);
    if (abs(value - value2) <= threshold && tail2 <= threshold) return value2;
    order *= 2;
    value = value2;
    tail = tail2;
  }
}

BigReal evaluate_index(const Index& idx, const EvalConfig& cfg) {
  return evaluate_word(index_to_word(idx), cfg);
}

BigReal zeta(unsigned m, mpfr_prec_t prec) {
  if (m < 2) throw EvalError("zeta requires m >= 2");
  const mpfr_prec_t wp = prec + 32;
  // Number of acceleration terms: error decays like (3+sqrt(8))^-n.
  const long n = static_cast<long>(std::ceil((static_cast<double>(wp) * 0.6931 + 12) / 1.7627)) + 4;

  // d_k = n * sum_{i<=k} (n+i-1)! 4^i / ((n-i)! (2i)!), all integers.
  std::vector<mpz_class> d(static_cast<size_t>(n) + 1);
  Rational term(1, n), partial(1, n);
  for (long k = 0; k <= n; ++k) {
    Rational dk = partial * n;
    if (dk.get_den() != 1) throw EvalError("internal: non-integer acceleration coefficient");
    d[static_cast<size_t>(k)] = dk.get_num();
    if (k < n) {
      Rational ratio(4 * (n + k) * (n - k), (2 * k + 2) * (2 * k + 1));
      ratio.canonicalize();
      term *= ratio;
      partial += term;
    }
  }

  BigReal eta(wp);
  mpz_class kp;
  for (long k = 0; k < n; ++k) {
    mpz_class num = d[static_cast<size_t>(k)] - d[static_cast<size_t>(n)];
    mpz_ui_pow_ui(kp.get_mpz_t(), static_cast<unsigned long>(k + 1), m);
    BigReal t(wp);
    mpfr_set_z(t.raw(), num.get_mpz_t(), MPFR_RNDN);
    BigReal denom(wp);
    mpfr_set_z(denom.raw(), kp.get_mpz_t(), MPFR_RNDN);
    t /= denom;
    if (k % 2 == 0) {
      eta -= t;
    } else {
      eta += t;
    }
  }
  BigReal dn(wp);
  mpfr_set_z(dn.raw(), d[static_cast<size_t>(n)].get_mpz_t(), MPFR_RNDN);
  eta /= dn;
  // zeta = eta / (1 - 2^(1-m))
  BigReal factor = 1 - BigReal::pow2(1 - static_cast<long>(m), wp);
  return eta / factor;
}

BigReal polylog(unsigned m, const BigReal& x, mpfr_prec_t prec) {
  if (m < 1) throw EvalError("polylog requires m >= 1");
  const mpfr_prec_t wp = std::max<mpfr_prec_t>(prec + 32, x.prec());
  BigReal ax = abs(x);
  if (ax > 1) throw EvalError("polylog requires |x| <= 1");
  if (ax == 1) {
    if (m == 1) throw EvalError("Li_1 diverges at x = 1");
    BigReal z = zeta(m, wp);
    if (x.sign() > 0) return z;
    // Li_m(-1) = (2^(1-m) - 1) zeta(m)
    return (BigReal::pow2(1 - static_cast<long>(m), wp) - 1) * z;
  }
  if (m == 1) return -log(1 - x);

  const BigReal eps = BigReal::pow2(-static_cast<long>(prec + 20), wp);
  BigReal sum(wp), xn(1, wp), xw = x;
  mpfr_prec_round(xw.raw(), wp, MPFR_RNDN);
  long n = 0;
  while (true) {
    ++n;
    xn *= xw;
    BigReal nm(n, wp);
    BigReal npow = nm;
    for (unsigned i = 1; i < m; ++i) npow *= nm;
    sum += xn / npow;
    // |x|^n / n^m already below eps and the geometric tail bound too.
    if (abs(xn) / (1 - ax) < eps) break;
    if (n > 400000) throw EvalError("polylog series failed to converge (|x| too close to 1)");
  }
  return sum;
}

BigReal polylog(unsigned m, const Rational& x, mpfr_prec_t prec) {
  return polylog(m, BigReal(x, prec + 32), prec);
}

BigReal zc_depth_one(unsigned m, const Rational& c, mpfr_prec_t prec) {
  if (m < 2) throw EvalError("depth-one values need m >= 2");
  if (!(c < 1)) throw EvalError("depth-one values need c < 1");
  return zeta(m, prec) - polylog(m, c, prec);
}

mpfr_prec_t bits_for_digits(long digits) {
  return static_cast<mpfr_prec_t>(std::ceil(static_cast<double>(digits) * 3.3219280948873626)) + 16;
}

}  // namespace zc
