#pragma once

#include <vector>

#include "zc/sparse_linalg.hpp"
#include "zc/word.hpp"
#include "zc/word_poly.hpp"

namespace zc {

/// All degree-n elements g * w of the duality ideal, where g = Z(a) - Z(a*)
/// runs over one representative per non-self-dual duality pair of weight
/// m <= n and w over the admissible basis of weight n - m (including the
/// empty word).
std::vector<WordPoly> ideal_generators(int n);

/// Rank over Q of the span of ideal_generators(n) inside the 2^(n-2)
/// dimensional degree-n piece of the admissible-word shuffle algebra.
/// Fraction-free sparse elimination; rows are processed sparsest first.
int graded_ideal_rank(int n);

struct BdimTable {
  std::vector<long> dims;   // dims[n] for n = 0..max_weight
  std::vector<long> ranks;  // graded ideal ranks, same indexing
};

/// Graded dimensions of the duality quotient: dim_n = 2^(n-2) - rank_n for
/// n >= 2, with dim_0 = 1 and dim_1 = 0.
BdimTable bdim_table(int max_weight);

/// The degree-n quotient with an explicit basis and a reduction map.
///
/// Columns are eliminated preferring non-canonical words, so the surviving
/// basis consists of duality-canonical representatives in lexicographic
/// order (one quotient basis among many; fixed for reproducibility).
class QuotientStructure {
 public:
  explicit QuotientStructure(int weight);

  int weight() const { return weight_; }
  const std::vector<Word>& basis() const { return basis_; }

  /// Coordinates of a weight-homogeneous polynomial over basis(), modulo
  /// the duality ideal. Throws if the polynomial has terms of the wrong
  /// weight.
  std::vector<Rational> reduce_to_basis(const WordPoly& poly) const;

  /// True iff the given words are a valid basis of the quotient (right
  /// count and jointly spanning modulo the ideal).
  bool validates_basis(const std::vector<Word>& candidate) const;

 private:
  SparseRatRow to_permuted_row(const WordPoly& poly) const;

  int weight_;
  std::vector<Word> words_;      // admissible words, lex order
  std::vector<int> perm_;        // permuted column -> lex position
  std::vector<int> pos_;         // lex position -> permuted column
  RatRref rref_;
  std::vector<Word> basis_;
  std::vector<int> basis_index_of_col_;  // permuted column -> basis index or -1
};

}  // namespace zc
