#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "zc/guess.hpp"

using namespace zc;

namespace {

std::vector<mpz_class> as_mpz(const std::vector<long>& v) {
  return std::vector<mpz_class>(v.begin(), v.end());
}

}  // namespace

TEST_CASE("minimal seed reproduces the 16 reference terms") {
  std::vector<mpz_class> a = extend_sequence(as_mpz({1, 0, 1, 1}), 16);
  CHECK(a == as_mpz(mtv_dimension_data()));
}

TEST_CASE("extension to 34 terms") {
  std::vector<mpz_class> seed = as_mpz(mtv_dimension_data());
  std::vector<mpz_class> a = extend_sequence(seed, 34);
  std::vector<long> expected = {1,    0,    1,    1,    2,     2,     4,     5,     9,
                                10,   19,   23,   42,   49,    91,    110,   201,   230,
                                431,  521,  952,  1112, 2064,  2509,  4573,  5318,  9891,
                                12024, 21915, 25658, 47573, 57831, 105404, 122834};
  CHECK(a == as_mpz(expected));
}

TEST_CASE("requesting no extension returns the seed prefix") {
  std::vector<mpz_class> seed = as_mpz(mtv_dimension_data());
  CHECK(extend_sequence(seed, seed.size()) == seed);
  CHECK(extend_sequence(seed, 6) == as_mpz({1, 0, 1, 1, 2, 2}));
}

TEST_CASE("seed validation") {
  CHECK_THROWS_AS(extend_sequence(as_mpz({1, 0, 1}), 10), std::invalid_argument);
  // A corrupted interior value is reported with its index.
  std::vector<mpz_class> bad = as_mpz({1, 0, 1, 1, 2, 2, 4, 6});
  CHECK_THROWS_WITH_AS(extend_sequence(bad, 10),
                       "seed violates the interleaving identity at index 7",
                       std::invalid_argument);
}

TEST_CASE("consistency check on the reference table") {
  ConsistencyReport rep = check_consistency(as_mpz(mtv_dimension_data()));
  CHECK(rep.ok);
  // Printed auxiliary rows.
  CHECK(rep.table.B == as_mpz({0, 0, 1, 1, 2, 3, 4, 6, 9, 14, 19, 29, 42, 65, 91, 140}));
  CHECK(rep.table.BmA == as_mpz({0, 0, 0, 0, 0, 1, 0, 1, 0, 4, 0, 6, 0, 16, 0, 30}));
  CHECK(rep.table.AsB ==
        as_mpz({0, 0, 1, 1, 4, 6, 16, 30, 81, 140, 361, 667, 1764, 3185, 8281, 15400}));
}

TEST_CASE("consistency fails on the classical MZV dimension row") {
  // The Padovan-style row does not satisfy the interleaving identity; the
  // first even-index defect is at n = 4.
  ConsistencyReport rep =
      check_consistency(as_mpz({1, 0, 1, 1, 1, 2, 2, 3, 4, 5, 7, 9, 12, 16}));
  CHECK_FALSE(rep.ok);
  CHECK(rep.first_bad_index == 4);
}

TEST_CASE("consistency fails on a zero tail") {
  ConsistencyReport rep = check_consistency(as_mpz({1, 0, 1, 1, 2, 0, 0, 0}));
  CHECK_FALSE(rep.ok);
  CHECK(rep.first_bad_index >= 2);
}

TEST_CASE("extension is prefix-monotone") {
  std::vector<mpz_class> a40 = extend_sequence(as_mpz({1, 0, 1, 1}), 40);
  std::vector<mpz_class> a25 = extend_sequence(as_mpz({1, 0, 1, 1}), 25);
  for (size_t i = 0; i < a25.size(); ++i) CHECK(a25[i] == a40[i]);
  // Long extensions keep satisfying the identity.
  CHECK(check_consistency(a40).ok);
}
