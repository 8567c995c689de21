#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>

#include "zc/quotient.hpp"

using namespace zc;

namespace {

bool contains_poly(const std::vector<WordPoly>& gens, const WordPoly& target) {
  return std::find(gens.begin(), gens.end(), target) != gens.end();
}

WordPoly pair_generator(const Index& idx) {
  Word w = index_to_word(idx);
  return WordPoly::monomial(w) - WordPoly::monomial(dual(w));
}

}  // namespace

TEST_CASE("ideal generators in low degree") {
  CHECK(ideal_generators(2).empty());

  std::vector<WordPoly> g3 = ideal_generators(3);
  CHECK(g3.size() == 1);
  CHECK(contains_poly(g3, pair_generator(Index({3}))));

  std::vector<WordPoly> g6 = ideal_generators(6);
  WordPoly witness = poly_product(pair_generator(Index({3})), WordPoly::monomial(index_to_word(Index({3}))));
  CHECK(contains_poly(g6, witness));
}

TEST_CASE("graded ideal ranks") {
  CHECK(graded_ideal_rank(0) == 0);
  CHECK(graded_ideal_rank(1) == 0);
  CHECK(graded_ideal_rank(2) == 0);
  CHECK(graded_ideal_rank(3) == 1);
  CHECK(graded_ideal_rank(4) == 1);
  CHECK(graded_ideal_rank(6) == 7);
}

TEST_CASE("quotient dimension table through weight 9") {
  BdimTable t = bdim_table(9);
  CHECK(t.dims == std::vector<long>{1, 0, 1, 1, 3, 4, 9, 15, 31, 55});
  for (int n = 2; n <= 9; ++n) CHECK(t.dims[n] == (1L << (n - 2)) - t.ranks[n]);
}

TEST_CASE("weight-6 defect: the product generator leaves the linear span") {
  // Linear generators alone identify duality pairs (rank 6 = number of
  // pairs); the full degree-6 ideal has rank 7.
  std::vector<std::vector<Rational>> rows;
  std::vector<Word> words = enumerate_admissible(6);
  auto to_row = [&words](const WordPoly& p) {
    std::vector<Rational> row(words.size(), Rational(0));
    for (const auto& [w, c] : p.terms()) {
      row[static_cast<size_t>(admissible_position(w))] = c;
    }
    return row;
  };
  for (const Word& w : words) {
    Word d = dual(w);
    if (d == w || d < w) continue;
    rows.push_back(to_row(WordPoly::monomial(w) - WordPoly::monomial(d)));
  }
  CHECK(rows.size() == 6);
  CHECK(rational_rank(rows) == 6);
  WordPoly witness = poly_product(pair_generator(Index({3})), WordPoly::monomial(index_to_word(Index({3}))));
  rows.push_back(to_row(witness));
  CHECK(rational_rank(rows) == 7);
}

TEST_CASE("quotient dimension never exceeds the duality class count") {
  BdimTable t = bdim_table(9);
  for (int n = 2; n <= 9; ++n) {
    long classes = duality_class_count(n);
    CHECK(t.dims[n] <= classes);
    if (n < 6) CHECK(t.dims[n] == classes);
  }
  // First strict drop is at weight 6: 9 < 10 classes.
  CHECK(t.dims[6] == 9);
  CHECK(duality_class_count(6) == 10);
}

TEST_CASE("rank is invariant under permutation and scaling of generators") {
  std::vector<WordPoly> gens = ideal_generators(7);
  std::vector<std::vector<Rational>> rows;
  std::vector<Word> words = enumerate_admissible(7);
  for (const WordPoly& g : gens) {
    std::vector<Rational> row(words.size(), Rational(0));
    for (const auto& [w, c] : g.terms()) row[static_cast<size_t>(admissible_position(w))] = c;
    rows.push_back(std::move(row));
  }
  int base = rational_rank(rows);
  std::reverse(rows.begin(), rows.end());
  for (size_t i = 0; i < rows.size(); i += 3) {
    for (auto& v : rows[i]) v *= Rational(-7, 3);
  }
  CHECK(rational_rank(rows) == base);
  CHECK((1L << 5) - base == 15);
}

TEST_CASE("quotient structure: basis and reduction") {
  QuotientStructure q7(7);
  CHECK(q7.basis().size() == 15);
  for (const Word& w : q7.basis()) CHECK(canonical_rep(w) == w);
  for (size_t i = 0; i + 1 < q7.basis().size(); ++i) CHECK(q7.basis()[i] < q7.basis()[i + 1]);

  // Reducing an ideal element must give zero coordinates.
  for (const WordPoly& g : ideal_generators(7)) {
    for (const Rational& v : q7.reduce_to_basis(g)) CHECK(v == 0);
  }
  // Reducing a basis word gives the matching unit vector.
  for (size_t i = 0; i < q7.basis().size(); ++i) {
    std::vector<Rational> coords = q7.reduce_to_basis(WordPoly::monomial(q7.basis()[i]));
    for (size_t j = 0; j < coords.size(); ++j) CHECK(coords[j] == (i == j ? 1 : 0));
  }
  // Duality rewrite: a non-basis word reduces to its class representative.
  std::vector<Rational> coords = q7.reduce_to_basis(WordPoly::monomial(index_to_word(Index({1, 2, 4}))));
  WordPoly back;
  for (size_t i = 0; i < coords.size(); ++i) back.add_term(q7.basis()[i], coords[i]);
  CHECK_FALSE(back.empty());

  QuotientStructure q8(8);
  CHECK(q8.basis().size() == 31);
  QuotientStructure q9(9);
  CHECK(q9.basis().size() == 55);
}

TEST_CASE("weight mismatch is rejected") {
  QuotientStructure q7(7);
  CHECK_THROWS_AS(q7.reduce_to_basis(WordPoly::monomial(Word::from_string("10"))),
                  std::invalid_argument);
}
