#include "zc/guess.hpp"

#include <stdexcept>

namespace zc {

namespace {

// A_n for n >= 4 from the closed recurrence; expects all smaller indices
// present.
mpz_class next_term(const std::vector<mpz_class>& a, size_t n) {
  mpz_class b = a[n - 1] + a[n - 2];
  if (n % 2 == 0) return b;
  size_t k = (n - 1) / 2;  // n = 2k+1 with k >= 2
  return b - a[k] * (a[k - 1] + a[k - 2]);
}

}  // namespace

SequenceTable build_table(const std::vector<mpz_class>& A) {
  SequenceTable t;
  t.A = A;
  t.B.assign(A.size(), 0);
  t.BmA.assign(A.size(), 0);
  t.AsB.assign(A.size(), 0);
  for (size_t n = 2; n < A.size(); ++n) {
    t.B[n] = A[n - 1] + A[n - 2];
    t.BmA[n] = t.B[n] - A[n];
    t.AsB[n] = A[n] * t.B[n];
  }
  return t;
}

std::vector<mpz_class> extend_sequence(const std::vector<mpz_class>& seed, size_t n_terms) {
  if (seed.size() < 4) {
    throw std::invalid_argument("seed must contain at least 4 terms (indices 0..3)");
  }
  for (size_t n = 4; n < seed.size(); ++n) {
    if (seed[n] != next_term(seed, n)) {
      throw std::invalid_argument("seed violates the interleaving identity at index " +
                                  std::to_string(n));
    }
  }
  if (n_terms <= seed.size()) {
    return std::vector<mpz_class>(seed.begin(), seed.begin() + static_cast<long>(n_terms));
  }
  std::vector<mpz_class> a = seed;
  a.reserve(n_terms);
  for (size_t n = seed.size(); n < n_terms; ++n) a.push_back(next_term(a, n));
  return a;
}

ConsistencyReport check_consistency(const std::vector<mpz_class>& A) {
  if (A.size() < 6) throw std::invalid_argument("need at least 6 terms to check consistency");
  ConsistencyReport report;
  report.table = build_table(A);
  const SequenceTable& t = report.table;
  for (size_t n = 2; n < A.size(); ++n) {
    if (n % 2 == 0 || n == 3) {
      if (t.BmA[n] != 0) {
        report.first_bad_index = static_cast<long>(n);
        report.message = "(B-A)_" + std::to_string(n) + " = " + t.BmA[n].get_str() +
                         ", expected 0";
        return report;
      }
    } else {
      size_t k = (n - 1) / 2;
      if (t.BmA[n] != t.AsB[k]) {
        report.first_bad_index = static_cast<long>(n);
        report.message = "(B-A)_" + std::to_string(n) + " = " + t.BmA[n].get_str() +
                         ", expected (A#B)_" + std::to_string(k) + " = " + t.AsB[k].get_str();
        return report;
      }
    }
  }
  report.ok = true;
  report.message = "identity holds on all " + std::to_string(A.size()) + " terms";
  return report;
}

const std::vector<long>& mtv_dimension_data() {
  static const std::vector<long> data = {1, 0, 1, 1, 2, 2, 4, 5, 9, 10, 19, 23, 42, 49, 91, 110};
  return data;
}

}  // namespace zc
