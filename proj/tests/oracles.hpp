#pragma once

#include <vector>

#include "zc/bigreal.hpp"
#include "zc/rational.hpp"
#include "zc/word.hpp"
#include "zc/word_poly.hpp"

namespace zc::testing {

/// Shuffle by naive recursive enumeration of every interleaving (duplicates
/// generated and then counted). Independent of the DP implementation.
WordPoly brute_force_shuffle(const Word& u, const Word& v);

/// Numeric iterated-integral oracle, independent of the path-composition
/// evaluator. The integral is transformed by u = L(t) = log((1-ct)/(1-t)),
/// which maps [0,1) to [0,oo), turns the pole-at-1 form into du exactly and
/// dt/t into an analytic density with exponential decay. The nested prefix
/// integrals are then computed level by level with spectral (Legendre)
/// cumulative quadrature on a shared graded panel mesh.
class IteratedIntegralOracle {
 public:
  IteratedIntegralOracle(const Rational& c, mpfr_prec_t prec, int nodes = 40,
                         double u_max = 130.0);

  /// I(w) for a nonempty admissible word.
  BigReal integral(const Word& w) const;

 private:
  void build_legendre();
  void build_mesh(double u_max);

  Rational c_;
  mpfr_prec_t wp_;
  int p_;
  std::vector<BigReal> xi_, weight_;
  std::vector<std::vector<BigReal>> values_;   // P_m at node i, m = 0..p
  std::vector<std::vector<BigReal>> coef_;     // node values -> Legendre coeffs
  std::vector<std::vector<BigReal>> cumul_;    // coeffs -> antiderivative at nodes
  std::vector<BigReal> half_;                  // per-panel (b-a)/2
  std::vector<BigReal> unodes_;                // all panel nodes, left to right
  std::vector<BigReal> gvals_;                 // density of dt/t at the nodes
};

}  // namespace zc::testing
