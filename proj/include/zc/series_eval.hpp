#pragma once

#include <functional>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "zc/bigreal.hpp"
#include "zc/rational.hpp"
#include "zc/word.hpp"

namespace zc {

/// Raised when an evaluation cannot be carried out (unsupported parameter,
/// divergent input, or a truncation that failed to converge). Never returns
/// a silently wrong value.
class EvalError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Parameters for numerical evaluation of the deformed values Z_c.
struct EvalConfig {
  Rational c{0};
  /// Target precision in bits; internal arithmetic adds guard bits on top.
  mpfr_prec_t precision = 256;
  /// Cut point for path composition. Empty selects the involution's fixed
  /// point (where the transformed tail reuses the same expansion point).
  std::optional<Rational> cut;
  /// Upper bound on c. The method slows down as c -> 1 (the cut point
  /// drifts towards the pole), so values past this bound are rejected.
  Rational c_max{19, 20};
  long max_terms = 1 << 21;
  /// Optional diagnostics sink (slow-convergence warnings).
  std::function<void(const std::string&)> warn;
};

/// Taylor coefficients of a prefix integral F_u(x) around 0:
/// constant term plus coeffs[n-1] for x^n, n = 1..order.
struct PowerSeries {
  BigReal constant;
  std::vector<BigReal> coeffs;

  int order() const { return static_cast<int>(coeffs.size()); }
  BigReal eval(const BigReal& x) const;
};

/// Coefficient of t^m in omega_1/dt, m = 0..count-1: 1 - c^(m+1).
std::vector<BigReal> omega1_coefficients(const Rational& c, int count, mpfr_prec_t prec);

/// Series of the prefix integral F_u over [0, x] for a word with innermost
/// letter 1 (words starting with letter 0 diverge at 0 and are rejected).
PowerSeries series_for_word(const Word& u, const Rational& c, int order, mpfr_prec_t prec);

/// The unique fixed point in (0,1) of s = (t-1)/(ct-1), computed in the
/// cancellation-free form 1/(1 + sqrt(1-c)); equals 1/2 at c = 0.
BigReal fixed_point(const Rational& c, mpfr_prec_t prec);

/// Iterated integral I(w) for an admissible nonempty word, by composition of
/// paths at the cut point: sum over splittings w = u.v of
/// F_u(p) * F_dual(v)(p'), where p' is the involution image of p.
BigReal evaluate_word(const Word& w, const EvalConfig& cfg);

BigReal evaluate_index(const Index& idx, const EvalConfig& cfg);

/// zeta(m) for integer m >= 2, via alternating-series acceleration
/// (Chebyshev-weighted eta series); independent of the iterated-integral
/// machinery.
BigReal zeta(unsigned m, mpfr_prec_t prec);

/// Polylogarithm Li_m(x) for |x| <= 1, x = 1 only when m >= 2.
BigReal polylog(unsigned m, const BigReal& x, mpfr_prec_t prec);
BigReal polylog(unsigned m, const Rational& x, mpfr_prec_t prec);

/// Depth-one value Li_m(1) - Li_m(c); an oracle for evaluate_index((m))
/// that never touches the path-composition code path.
BigReal zc_depth_one(unsigned m, const Rational& c, mpfr_prec_t prec);

/// Bits needed to honour `digits` significant decimal digits.
mpfr_prec_t bits_for_digits(long digits);

}  // namespace zc
