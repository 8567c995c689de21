#pragma once

#include <gmpxx.h>

#include <map>
#include <vector>

#include "zc/rational.hpp"

namespace zc {

/// Sparse integer row: (column, coefficient) pairs sorted by column,
/// no zero coefficients.
using SparseIntRow = std::vector<std::pair<int, mpz_class>>;
using SparseRatRow = std::vector<std::pair<int, Rational>>;

/// Divides out the content (gcd) and normalizes the leading sign to +.
void normalize_row(SparseIntRow& row);

/// Incremental fraction-free rank computation over Q for integer rows.
/// Rows are reduced against stored pivots with cross-multiplication
/// (a_piv * row - a_row * piv), gcd-stripped after every combination so
/// entries stay small. A row that reduces to zero is dependent.
class IntRankEliminator {
 public:
  /// Returns true iff the row was independent of the rows seen so far.
  bool add_row(SparseIntRow row);

  int rank() const { return static_cast<int>(pivots_.size()); }
  const std::map<int, SparseIntRow>& pivot_rows() const { return pivots_; }

 private:
  std::map<int, SparseIntRow> pivots_;  // leading column -> normalized row
};

/// Reduced row echelon form over Q with an explicit residue map, built once
/// from a generating set. reduce() rewrites any vector modulo the row span:
/// the residue is supported on the non-pivot columns only.
class RatRref {
 public:
  /// ncols is the ambient dimension; rows may arrive in any order.
  explicit RatRref(int ncols) : ncols_(ncols) {}

  void add_row(SparseRatRow row);
  /// Back-substitutes so every pivot row is supported on its pivot column
  /// plus non-pivot columns only. Must be called before reduce().
  void finalize();

  int rank() const { return static_cast<int>(pivots_.size()); }
  int ncols() const { return ncols_; }
  std::vector<int> pivot_columns() const;
  std::vector<int> free_columns() const;

  /// Residue of `row` modulo the span; supported on free columns.
  SparseRatRow reduce(SparseRatRow row) const;

 private:
  int ncols_;
  bool finalized_ = false;
  std::map<int, SparseRatRow> pivots_;  // leading column -> row with pivot 1
};

/// Rank over Q of a list of dense rational rows (convenience for small
/// relation-span checks).
int rational_rank(const std::vector<std::vector<Rational>>& rows);

/// Rank over Q of dense integer rows.
int integer_rank(const std::vector<std::vector<mpz_class>>& rows);

}  // namespace zc
