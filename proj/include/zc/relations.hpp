#pragma once

#include <gmpxx.h>

#include <map>
#include <string>
#include <vector>

#include "zc/bigreal.hpp"
#include "zc/quotient.hpp"
#include "zc/rational.hpp"
#include "zc/series_eval.hpp"
#include "zc/word.hpp"

namespace zc {

/// An integer linear relation among weight-n values Z_c over the reduced
/// basis, with the residuals observed at the discovery samples.
struct RelationCandidate {
  int weight = 0;
  std::vector<Index> basis;
  std::vector<mpz_class> coeffs;                 // primitive (gcd 1), first nonzero > 0
  std::map<std::string, std::string> residuals;  // sample "p/q" -> decimal residual

  /// Throws unless coeffs is nonzero, primitive, and sized to the basis.
  void validate() const;
};

struct RelationSearchConfig {
  std::vector<Rational> samples{Rational(0), Rational(-1), Rational(1, 2), Rational(-1, 2),
                                Rational(1, 3)};
  /// Decimal working digits; 0 selects the default 25 + 15 * weight.
  long digits = 0;
  mpz_class height_bound = 65536;
  unsigned jobs = 1;
};

/// The duality-reduced basis over which relations are expressed: a basis of
/// the weight-n duality quotient. Weight 8 uses the fixed reference ordering
/// below so coefficient lists are comparable; other weights use the computed
/// canonical-representative basis in lexicographic word order.
std::vector<Word> relation_basis(int weight);

/// The fixed 31-element weight-8 reference basis (as indices, in order).
const std::vector<Index>& weight8_reference_basis();

struct ValueMatrix {
  int weight = 0;
  std::vector<Word> basis;
  std::vector<Rational> samples;
  long digits = 0;
  /// rows[i][j] = Z_{c_j} of basis word i.
  std::vector<std::vector<BigReal>> rows;
};

/// Evaluates every basis word at every sample, in parallel across
/// (word, sample) pairs.
ValueMatrix value_matrix(int weight, const std::vector<Rational>& samples, long digits,
                         unsigned jobs = 1);

/// Integer relations that hold simultaneously at every sample, found by LLL
/// on [Identity | round(10^D * values)], filtered by the acceptance
/// threshold 10^(-D/2) and the height bound, reduced to an independent set.
std::vector<RelationCandidate> find_relations(int weight, const RelationSearchConfig& cfg = {});

struct VerifyReport {
  std::map<std::string, std::string> residuals;  // sample -> decimal residual
  bool pass = false;
  std::string threshold;
};

/// Re-evaluates a candidate at fresh samples; passes when every residual is
/// below 10^(-digits/2).
VerifyReport verify_relation(const RelationCandidate& cand, const std::vector<Rational>& samples,
                             long digits, unsigned jobs = 1);

struct DimensionEstimate {
  int weight = 0;
  int basis_size = 0;
  int relation_rank = 0;
  int dimension = 0;  // basis_size - relation_rank
};

DimensionEstimate dimension_estimate(int weight, const RelationSearchConfig& cfg = {});

/// Rank over Q of the candidates' coefficient vectors.
int relation_rank(const std::vector<RelationCandidate>& candidates);

/// True iff `target` (coordinates over relation_basis(weight)) lies in the
/// rational row span of the candidates.
bool span_contains(const std::vector<RelationCandidate>& candidates,
                   const std::vector<Rational>& target);

/// Coordinates of an integer combination of indices over relation_basis(w),
/// rewritten modulo the duality ideal.
std::vector<Rational> combination_over_basis(int weight,
                                             const std::vector<std::pair<Index, long>>& terms);

}  // namespace zc
