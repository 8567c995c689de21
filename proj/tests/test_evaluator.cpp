#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>
#include <vector>

#include "zc/series_eval.hpp"
#include "zc/word_poly.hpp"

using namespace zc;

namespace {

// Published 50-digit reference values.
const char* kZeta2 = "1.6449340668482264364724151666460251892189499012068";
const char* kZeta3 = "1.2020569031595942853997381615114499907649862923405";

BigReal tol10(long k, mpfr_prec_t prec = 512) { return BigReal::pow10(-k, prec); }

EvalConfig config(const Rational& c, long digits) {
  EvalConfig cfg;
  cfg.c = c;
  cfg.precision = bits_for_digits(digits);
  return cfg;
}

BigReal eval_poly(const WordPoly& p, const EvalConfig& cfg) {
  BigReal sum(cfg.precision + 64);
  for (const auto& [w, coeff] : p.terms()) {
    sum += BigReal(coeff, cfg.precision + 64) * evaluate_word(w, cfg);
  }
  return sum;
}

}  // namespace

TEST_CASE("omega1 coefficients") {
  mpfr_prec_t prec = 128;
  for (const BigReal& a : omega1_coefficients(Rational(0), 6, prec)) CHECK(a == 1);

  std::vector<BigReal> alt = omega1_coefficients(Rational(-1), 6, prec);
  for (int m = 0; m < 6; ++m) CHECK(alt[m] == (m % 2 == 0 ? 2 : 0));

  std::vector<BigReal> half = omega1_coefficients(Rational(1, 2), 3, prec);
  CHECK(half[0] == BigReal(Rational(1, 2), prec));
  CHECK(half[1] == BigReal(Rational(3, 4), prec));
  CHECK(half[2] == BigReal(Rational(7, 8), prec));
}

TEST_CASE("prefix series for the single letter 1") {
  mpfr_prec_t prec = 256;
  Rational c(1, 2);
  PowerSeries s = series_for_word(Word::from_string("1"), c, 40, prec);
  CHECK(s.constant.is_zero());
  Rational cp = 1;
  for (int n = 1; n <= 40; ++n) {
    cp *= c;
    CHECK(abs(s.coeffs[n - 1] - BigReal(Rational(Rational(1) - cp) / n, prec)) < tol10(70));
  }
  // Closed form log((1-cx)/(1-x)) at x = 1/3.
  BigReal x(Rational(1, 3), prec);
  BigReal closed = log((1 - BigReal(c, prec) * x) / (1 - x));
  PowerSeries longer = series_for_word(Word::from_string("1"), c, 400, prec);
  CHECK(abs(longer.eval(x) - closed) < tol10(70));
}

TEST_CASE("prefix series at c = 0 reproduces classical series") {
  mpfr_prec_t prec = 256;
  PowerSeries lg = series_for_word(Word::from_string("1"), Rational(0), 30, prec);
  for (int n = 1; n <= 30; ++n) CHECK(abs(lg.coeffs[n - 1] - BigReal(Rational(1, n), prec)) < tol10(70));

  PowerSeries li2 = series_for_word(Word::from_string("10"), Rational(0), 30, prec);
  for (int n = 1; n <= 30; ++n) {
    CHECK(abs(li2.coeffs[n - 1] - BigReal(Rational(1, n * n), prec)) < tol10(70));
  }
}

TEST_CASE("series rejects divergent words") {
  CHECK_THROWS_AS(series_for_word(Word::from_string("01"), Rational(0), 10, 128), EvalError);
  CHECK_THROWS_AS(series_for_word(Word(), Rational(0), 10, 128), EvalError);
}

TEST_CASE("fixed point of the involution") {
  mpfr_prec_t prec = 256;
  CHECK(abs(fixed_point(Rational(0), prec) - BigReal(Rational(1, 2), prec)) < tol10(70));
  CHECK(abs(fixed_point(Rational(-1), prec) - (sqrt(BigReal(2, prec)) - 1)) < tol10(70));
  CHECK(abs(fixed_point(Rational(3, 4), prec) - BigReal(Rational(2, 3), prec)) < tol10(70));
  // Fixity under s = (p-1)/(cp-1) for a generic c.
  Rational c(-5, 7);
  BigReal p = fixed_point(c, prec);
  BigReal image = (p - 1) / (BigReal(c, prec) * p - 1);
  CHECK(abs(image - p) < tol10(70));
}

TEST_CASE("zeta reference values") {
  mpfr_prec_t prec = bits_for_digits(60);
  BigReal pi = BigReal::pi(prec + 32);
  CHECK(abs(zeta(2, prec) - pi * pi / 6) < tol10(55));
  CHECK(abs(zeta(4, prec) - pi * pi * pi * pi / 90) < tol10(55));
  CHECK(abs(zeta(3, prec) - BigReal::from_string(kZeta3, prec + 32)) < tol10(49));
  CHECK_THROWS_AS(zeta(1, prec), EvalError);
}

TEST_CASE("polylog") {
  mpfr_prec_t prec = bits_for_digits(50);
  BigReal half(Rational(1, 2), prec);
  CHECK(abs(polylog(1, half, prec) - log(BigReal(2, prec + 32))) < tol10(45));
  BigReal pi = BigReal::pi(prec + 32);
  CHECK(abs(polylog(2, Rational(1), prec) - pi * pi / 6) < tol10(45));
  CHECK(abs(polylog(2, Rational(-1), prec) + pi * pi / 12) < tol10(45));
  // Li_2(1/2) = pi^2/12 - log(2)^2/2.
  BigReal l2 = log(BigReal(2, prec + 32));
  CHECK(abs(polylog(2, half, prec) - (pi * pi / 12 - l2 * l2 / 2)) < tol10(45));
  CHECK_THROWS_AS(polylog(1, Rational(1), prec), EvalError);
  CHECK_THROWS_AS(polylog(2, BigReal(2, prec), prec), EvalError);
}

TEST_CASE("depth-one values") {
  mpfr_prec_t prec = bits_for_digits(60);
  BigReal pi = BigReal::pi(prec + 32);
  CHECK(abs(zc_depth_one(2, Rational(0), prec) - pi * pi / 6) < tol10(55));
  CHECK(abs(zc_depth_one(2, Rational(-1), prec) - pi * pi / 4) < tol10(55));
  // The literal carries 50 digits, so compare at that accuracy.
  BigReal z3 = BigReal::from_string(kZeta3, prec + 32);
  CHECK(abs(zc_depth_one(3, Rational(1, 2), prec) - (z3 - polylog(3, Rational(1, 2), prec))) <
        tol10(49));
  CHECK_THROWS_AS(zc_depth_one(1, Rational(0), prec), EvalError);
}

TEST_CASE("evaluation reference points") {
  // zeta(2) through the full composition machinery at c = 0, cut 1/2:
  // the splitting reproduces 2 Li_2(1/2) + log(2)^2.
  EvalConfig cfg = config(Rational(0), 50);
  mpfr_prec_t wp = cfg.precision + 32;
  BigReal pi = BigReal::pi(wp);
  BigReal v = evaluate_word(Word::from_string("10"), cfg);
  CHECK(abs(v - pi * pi / 6) < tol10(45));
  BigReal l2 = log(BigReal(2, wp));
  CHECK(abs(v - (2 * polylog(2, Rational(1, 2), cfg.precision) + l2 * l2)) < tol10(45));
  CHECK(abs(v - BigReal::from_string(kZeta2, wp)) < tol10(45));

  // c = -1 depth one: pi^2/4 and (7/4) zeta(3).
  EvalConfig cm1 = config(Rational(-1), 50);
  CHECK(abs(evaluate_word(Word::from_string("10"), cm1) - pi * pi / 4) < tol10(40));
  BigReal z3 = BigReal::from_string(kZeta3, wp);
  CHECK(abs(evaluate_index(Index({3}), cm1) - z3 * 7 / 4) < tol10(40));

  // c = 1/2 depth one: pi^2/12 + log(2)^2/2.
  EvalConfig ch = config(Rational(1, 2), 50);
  CHECK(abs(evaluate_index(Index({2}), ch) - (pi * pi / 12 + l2 * l2 / 2)) < tol10(40));

  // c = 0, index (1,2): by duality this is zeta(3).
  CHECK(abs(evaluate_index(Index({1, 2}), cfg) - z3) < tol10(45));
}

TEST_CASE("duality of values across weights up to 6") {
  for (const Rational& c : {Rational(0), Rational(-1), Rational(1, 2), Rational(-1, 2)}) {
    EvalConfig cfg = config(c, 40);
    for (int n = 2; n <= 6; ++n) {
      for (const Word& w : enumerate_admissible(n)) {
        CHECK(abs(evaluate_word(w, cfg) - evaluate_word(dual(w), cfg)) < tol10(35));
      }
    }
  }
  // The fourth sample at full width (weights 7 and 8).
  EvalConfig cfg = config(Rational(-1, 2), 40);
  for (int n = 7; n <= 8; ++n) {
    for (const Word& w : enumerate_admissible(n)) {
      CHECK(abs(evaluate_word(w, cfg) - evaluate_word(dual(w), cfg)) < tol10(35));
    }
  }
}

TEST_CASE("cut-point independence") {
  for (const Rational& c : {Rational(1, 3), Rational(-1, 2)}) {
    EvalConfig fixed = config(c, 40);
    EvalConfig generic = config(c, 40);
    generic.cut = Rational(2, 5);
    for (int n = 2; n <= 6; ++n) {
      for (const Word& w : enumerate_admissible(n)) {
        CHECK(abs(evaluate_word(w, fixed) - evaluate_word(w, generic)) < tol10(35));
      }
    }
  }
}

TEST_CASE("depth-one oracle agreement") {
  for (const Rational& c : {Rational(0), Rational(-1), Rational(1, 2), Rational(1, 3)}) {
    EvalConfig cfg = config(c, 45);
    for (unsigned m = 2; m <= 6; ++m) {
      CHECK(abs(evaluate_index(Index({static_cast<int>(m)}), cfg) -
                zc_depth_one(m, c, cfg.precision)) < tol10(40));
    }
  }
}

TEST_CASE("alternating specialization matches the odd-harmonic closed form") {
  // Z_{-1}(m) = 2 (1 - 2^-m) zeta(m).
  EvalConfig cfg = config(Rational(-1), 45);
  mpfr_prec_t wp = cfg.precision + 32;
  for (unsigned m = 2; m <= 6; ++m) {
    BigReal expected = (2 - BigReal::pow2(1 - static_cast<long>(m), wp)) * zeta(m, wp);
    CHECK(abs(evaluate_index(Index({static_cast<int>(m)}), cfg) - expected) < tol10(40));
  }
}

TEST_CASE("shuffle homomorphism on sample pairs") {
  std::mt19937 rng(4242);
  for (const Rational& c : {Rational(0), Rational(-1, 2)}) {
    EvalConfig cfg = config(c, 40);
    for (int trial = 0; trial < 6; ++trial) {
      int a = std::uniform_int_distribution<int>(2, 4)(rng);
      int b = std::uniform_int_distribution<int>(2, std::min(4, 8 - a))(rng);
      std::vector<Word> wa = enumerate_admissible(a), wb = enumerate_admissible(b);
      Word u = wa[std::uniform_int_distribution<size_t>(0, wa.size() - 1)(rng)];
      Word v = wb[std::uniform_int_distribution<size_t>(0, wb.size() - 1)(rng)];
      BigReal lhs = evaluate_word(u, cfg) * evaluate_word(v, cfg);
      BigReal rhs = eval_poly(shuffle_words(u, v), cfg);
      CHECK(abs(lhs - rhs) < tol10(35));
    }
  }
}

TEST_CASE("evaluation errors") {
  EvalConfig cfg = config(Rational(0), 30);
  CHECK_THROWS_AS(evaluate_word(Word(), cfg), EvalError);
  CHECK_THROWS_AS(evaluate_word(Word::from_string("11"), cfg), EvalError);

  EvalConfig big = config(Rational(3, 2), 30);
  CHECK_THROWS_AS(evaluate_index(Index({2}), big), EvalError);

  EvalConfig above_max = config(Rational(97, 100), 30);
  CHECK_THROWS_AS(evaluate_index(Index({2}), above_max), EvalError);

  EvalConfig bad_cut = config(Rational(0), 30);
  bad_cut.cut = Rational(3, 2);
  CHECK_THROWS_AS(evaluate_index(Index({2}), bad_cut), EvalError);

  // Strongly negative c pushes the cut to the series' radius of convergence.
  EvalConfig far = config(Rational(-5), 30);
  CHECK_THROWS_AS(evaluate_index(Index({2}), far), EvalError);

  EvalConfig tiny = config(Rational(1, 2), 60);
  tiny.max_terms = 64;
  CHECK_THROWS_AS(evaluate_index(Index({2}), tiny), EvalError);
}

TEST_CASE("slow-convergence warning fires near c_max") {
  EvalConfig cfg = config(Rational(19, 20), 30);
  std::vector<std::string> messages;
  cfg.warn = [&messages](const std::string& m) { messages.push_back(m); };
  evaluate_index(Index({2}), cfg);
  CHECK(!messages.empty());
}
