#pragma once

#include <map>
#include <optional>
#include <string>

#include "zc/rational.hpp"
#include "zc/word.hpp"

namespace zc {

/// Element of the shuffle algebra on binary words: a finite map from words
/// to exact rational coefficients. Zero coefficients are never stored.
class WordPoly {
 public:
  WordPoly() = default;

  static WordPoly unit() { return monomial(Word()); }
  static WordPoly monomial(const Word& w, const Rational& coeff = 1);

  bool empty() const { return terms_.empty(); }
  size_t size() const { return terms_.size(); }
  const std::map<Word, Rational>& terms() const { return terms_; }
  Rational coeff(const Word& w) const;

  void add_term(const Word& w, const Rational& coeff);

  WordPoly& operator+=(const WordPoly& o);
  WordPoly& operator-=(const WordPoly& o);
  WordPoly& operator*=(const Rational& s);
  friend WordPoly operator+(WordPoly a, const WordPoly& b) { return a += b; }
  friend WordPoly operator-(WordPoly a, const WordPoly& b) { return a -= b; }
  friend WordPoly operator*(WordPoly a, const Rational& s) { return a *= s; }
  friend bool operator==(const WordPoly& a, const WordPoly& b) { return a.terms_ == b.terms_; }

  /// Common weight of all terms, if the polynomial is homogeneous
  /// (the zero polynomial is homogeneous of any weight -> nullopt).
  std::optional<int> homogeneous_weight() const;

  /// Sum of all coefficients (for a shuffle of two words this is the
  /// binomial (|u|+|v| choose |u|)).
  Rational coefficient_mass() const;

  /// Renders as e.g. "6*Z(1,4) + 3*Z(2,3) + Z(3,2)", terms in descending
  /// lexicographic word order. Terms whose word is not a valid index
  /// (inadmissible) are rendered as I(<letters>).
  std::string str() const;

 private:
  std::map<Word, Rational> terms_;
};

/// Shuffle product of two words: the sum over all interleavings that keep
/// the internal order of each factor, with multiplicity. Computed by dynamic
/// programming over suffix pairs with coefficient merging.
WordPoly shuffle_words(const Word& u, const Word& v);

/// Bilinear extension of the shuffle product.
WordPoly poly_product(const WordPoly& p, const WordPoly& q);

}  // namespace zc
