#pragma once

#include <gmpxx.h>

#include <string>
#include <vector>

namespace zc {

/// The four aligned rows of the dimension-sequence experiment:
///   B_n   = A_{n-1} + A_{n-2}            (n >= 2)
///   BmA_n = B_n - A_n
///   AsB_n = A_n * B_n                    (n >= 2)
/// Entries below index 2 of B, BmA and AsB are padding zeros.
struct SequenceTable {
  std::vector<mpz_class> A, B, BmA, AsB;
};

SequenceTable build_table(const std::vector<mpz_class>& A);

/// Extends a prefix of A using the interleaving identity
///   A_{2k}   = B_{2k}
///   A_{2k+1} = B_{2k+1} - AsB_k          (k >= 2),
/// which encodes "B - A equals A#B with a zero inserted between consecutive
/// terms". Needs a seed of length >= 4; a seed that violates the identity
/// internally is rejected with the first failing index.
std::vector<mpz_class> extend_sequence(const std::vector<mpz_class>& seed, size_t n_terms);

struct ConsistencyReport {
  bool ok = false;
  long first_bad_index = -1;
  std::string message;
  SequenceTable table;
};

/// Verifies (B-A)_n = 0 for even n and n = 3, and (B-A)_{2k+1} = (A#B)_k for
/// k >= 2, over the whole input range.
ConsistencyReport check_consistency(const std::vector<mpz_class>& A);

/// The 16 reference dimensions (n = 0..15) the extension is seeded from.
const std::vector<long>& mtv_dimension_data();

}  // namespace zc
