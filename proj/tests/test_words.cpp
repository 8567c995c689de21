#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <set>

#include "zc/word.hpp"

using namespace zc;

TEST_CASE("index to word conversion") {
  CHECK(index_to_word(Index({3})).str() == "100");
  CHECK(index_to_word(Index({1, 2})).str() == "110");
  CHECK(index_to_word(Index({2, 3})).str() == "10100");
  CHECK(index_to_word(Index({1, 4})).str() == "11000");

  CHECK_THROWS_AS(index_to_word(Index()), std::invalid_argument);
  CHECK_THROWS_AS(index_to_word(Index({1})), std::invalid_argument);
  CHECK_THROWS_AS(index_to_word(Index({2, 1})), std::invalid_argument);
  CHECK_THROWS_AS(index_to_word(Index({0, 2})), std::invalid_argument);
}

TEST_CASE("word to index conversion") {
  CHECK(word_to_index(Word::from_string("100")) == Index({3}));
  CHECK(word_to_index(Word::from_string("11000")) == Index({1, 4}));
  CHECK(word_to_index(Word::from_string("10010")) == Index({3, 2}));

  CHECK_THROWS_AS(word_to_index(Word()), std::invalid_argument);
  CHECK_THROWS_AS(word_to_index(Word::from_string("010")), std::invalid_argument);
  CHECK_THROWS_AS(word_to_index(Word::from_string("101")), std::invalid_argument);
}

TEST_CASE("round trip on all admissible words up to weight 12") {
  for (int n = 2; n <= 12; ++n) {
    for (const Word& w : enumerate_admissible(n)) {
      Index idx = word_to_index(w);
      CHECK(idx.admissible());
      CHECK(idx.weight() == n);
      CHECK(index_to_word(idx) == w);
    }
  }
}

TEST_CASE("duality involution") {
  CHECK(dual(Word::from_string("100")) == Word::from_string("110"));
  CHECK(dual(Index({3})) == Index({1, 2}));
  CHECK(dual(Word::from_string("1100")) == Word::from_string("1100"));
  CHECK(dual(Word()) == Word());

  for (int n = 0; n <= 14; ++n) {
    for (const Word& w : enumerate_admissible(n)) {
      Word d = dual(w);
      CHECK(d.admissible());
      CHECK(d.size() == n);
      CHECK(dual(d) == w);
    }
  }
}

TEST_CASE("enumeration counts and order") {
  CHECK(enumerate_admissible(0).size() == 1);
  CHECK(enumerate_admissible(0)[0].empty());
  CHECK(enumerate_admissible(1).empty());
  for (int n = 2; n <= 14; ++n) {
    CHECK(enumerate_admissible(n).size() == (size_t(1) << (n - 2)));
  }

  std::vector<std::string> got;
  for (const Word& w : enumerate_admissible(4)) got.push_back(w.str());
  CHECK(got == std::vector<std::string>{"1000", "1010", "1100", "1110"});

  for (int n = 2; n <= 10; ++n) {
    std::vector<Word> words = enumerate_admissible(n);
    for (size_t i = 0; i + 1 < words.size(); ++i) CHECK(words[i] < words[i + 1]);
    for (size_t i = 0; i < words.size(); ++i) {
      CHECK(admissible_position(words[i]) == static_cast<int>(i));
    }
  }
}

TEST_CASE("canonical representatives") {
  CHECK(canonical_rep(Word::from_string("110")) == Word::from_string("100"));
  CHECK(canonical_rep(Word::from_string("1010")) == Word::from_string("1010"));
  for (int n = 2; n <= 12; ++n) {
    for (const Word& w : enumerate_admissible(n)) {
      CHECK(canonical_rep(w) == canonical_rep(dual(w)));
      CHECK((canonical_rep(w) < w || canonical_rep(w) == w));
    }
  }
}

TEST_CASE("duality class counts") {
  // (2^(n-2) + #self-dual)/2: self-dual words exist only in even weight.
  CHECK(duality_class_count(4) == 3);
  CHECK(duality_class_count(5) == 4);
  CHECK(duality_class_count(6) == 10);
  CHECK(duality_class_count(7) == 16);
  CHECK(duality_class_count(8) == 36);
  CHECK(duality_class_count(9) == 64);
}

TEST_CASE("text formats") {
  CHECK(Index::from_string("1,1,3") == Index({1, 1, 3}));
  CHECK(Index({1, 1, 3}).str() == "1,1,3");
  CHECK(Word::from_string("11010").str() == "11010");
  CHECK_THROWS_AS(Index::from_string("1,,3"), std::invalid_argument);
  CHECK_THROWS_AS(Index::from_string("1,0"), std::invalid_argument);
  CHECK_THROWS_AS(Index::from_string("a"), std::invalid_argument);
  CHECK_THROWS_AS(Word::from_string("102"), std::invalid_argument);
}

TEST_CASE("admissibility") {
  CHECK(Word().admissible());
  CHECK(Word::from_string("10").admissible());
  CHECK_FALSE(Word::from_string("1").admissible());
  CHECK_FALSE(Word::from_string("0").admissible());
  CHECK_FALSE(Word::from_string("01").admissible());
  CHECK_FALSE(Word::from_string("11").admissible());
}
