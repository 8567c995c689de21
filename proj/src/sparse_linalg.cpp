#include "zc/sparse_linalg.hpp"

#include <stdexcept>

namespace zc {

namespace {

// r1 * a - r2 * b over sorted sparse rows.
SparseIntRow combine(const SparseIntRow& r1, const mpz_class& a, const SparseIntRow& r2,
                     const mpz_class& b) {
  SparseIntRow out;
  out.reserve(r1.size() + r2.size());
  size_t i = 0, j = 0;
  mpz_class tmp;
  while (i < r1.size() || j < r2.size()) {
    if (j == r2.size() || (i < r1.size() && r1[i].first < r2[j].first)) {
      out.emplace_back(r1[i].first, r1[i].second * a);
      ++i;
    } else if (i == r1.size() || r2[j].first < r1[i].first) {
      out.emplace_back(r2[j].first, -(r2[j].second * b));
      ++j;
    } else {
      tmp = r1[i].second * a - r2[j].second * b;
      if (tmp != 0) out.emplace_back(r1[i].first, tmp);
      ++i;
      ++j;
    }
  }
  return out;
}

}  // namespace

void normalize_row(SparseIntRow& row) {
  if (row.empty()) return;
  mpz_class g = 0;
  for (const auto& [c, v] : row) {
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), v.get_mpz_t());
    if (g == 1) break;
  }
  if (row.front().second < 0) g = -g;
  if (g != 1) {
    for (auto& [c, v] : row) mpz_divexact(v.get_mpz_t(), v.get_mpz_t(), g.get_mpz_t());
  }
}

bool IntRankEliminator::add_row(SparseIntRow row) {
  normalize_row(row);
  while (!row.empty()) {
    auto it = pivots_.find(row.front().first);
    if (it == pivots_.end()) {
      pivots_.emplace(row.front().first, std::move(row));
      return true;
    }
    row = combine(row, it->second.front().second, it->second, row.front().second);
    normalize_row(row);
  }
  return false;
}

void RatRref::add_row(SparseRatRow row) {
  if (finalized_) throw std::logic_error("RatRref already finalized");
  while (!row.empty()) {
    if (row.front().first >= ncols_) throw std::out_of_range("column outside ambient space");
    auto it = pivots_.find(row.front().first);
    if (it == pivots_.end()) {
      Rational lead = row.front().second;
      for (auto& [c, v] : row) v /= lead;
      pivots_.emplace(row.front().first, std::move(row));
      return;
    }
    const SparseRatRow& piv = it->second;
    Rational f = row.front().second;
    SparseRatRow out;
    out.reserve(row.size() + piv.size());
    size_t i = 0, j = 0;
    while (i < row.size() || j < piv.size()) {
      if (j == piv.size() || (i < row.size() && row[i].first < piv[j].first)) {
        out.push_back(row[i++]);
      } else if (i == row.size() || piv[j].first < row[i].first) {
        out.emplace_back(piv[j].first, -f * piv[j].second);
        ++j;
      } else {
        Rational v = row[i].second - f * piv[j].second;
        if (v != 0) out.emplace_back(row[i].first, v);
        ++i;
        ++j;
      }
    }
    row = std::move(out);
  }
}

void RatRref::finalize() {
  if (finalized_) return;
  // Eliminate pivot columns from every earlier row, walking pivots from the
  // right so each row needs a single pass.
  for (auto it = pivots_.rbegin(); it != pivots_.rend(); ++it) {
    SparseRatRow& row = it->second;
    bool again = true;
    while (again) {
      again = false;
      for (size_t i = 1; i < row.size(); ++i) {
        auto p = pivots_.find(row[i].first);
        if (p == pivots_.end()) continue;
        Rational f = row[i].second;
        SparseRatRow out;
        out.reserve(row.size() + p->second.size());
        size_t a = 0, b = 0;
        const SparseRatRow& piv = p->second;
        while (a < row.size() || b < piv.size()) {
          if (b == piv.size() || (a < row.size() && row[a].first < piv[b].first)) {
            out.push_back(row[a++]);
          } else if (a == row.size() || piv[b].first < row[a].first) {
            out.emplace_back(piv[b].first, -f * piv[b].second);
            ++b;
          } else {
            Rational v = row[a].second - f * piv[b].second;
            if (v != 0) out.emplace_back(row[a].first, v);
            ++a;
            ++b;
          }
        }
        row = std::move(out);
        again = true;
        break;
      }
    }
  }
  finalized_ = true;
}

std::vector<int> RatRref::pivot_columns() const {
  std::vector<int> cols;
  cols.reserve(pivots_.size());
  for (const auto& [c, row] : pivots_) cols.push_back(c);
  return cols;
}

std::vector<int> RatRref::free_columns() const {
  std::vector<int> cols;
  auto it = pivots_.begin();
  for (int c = 0; c < ncols_; ++c) {
    while (it != pivots_.end() && it->first < c) ++it;
    if (it == pivots_.end() || it->first != c) cols.push_back(c);
  }
  return cols;
}

SparseRatRow RatRref::reduce(SparseRatRow row) const {
  if (!finalized_) throw std::logic_error("RatRref::finalize() must run before reduce()");
  SparseRatRow residue;
  // One pass: pivot rows are fully back-substituted, so subtracting the
  // pivot multiple never reintroduces an earlier pivot column.
  size_t i = 0;
  while (i < row.size()) {
    auto p = pivots_.find(row[i].first);
    if (p == pivots_.end()) {
      ++i;
      continue;
    }
    Rational f = row[i].second;
    SparseRatRow out;
    out.reserve(row.size() + p->second.size());
    size_t a = 0, b = 0;
    const SparseRatRow& piv = p->second;
    while (a < row.size() || b < piv.size()) {
      if (b == piv.size() || (a < row.size() && row[a].first < piv[b].first)) {
        out.push_back(row[a++]);
      } else if (a == row.size() || piv[b].first < row[a].first) {
        out.emplace_back(piv[b].first, -f * piv[b].second);
        ++b;
      } else {
        Rational v = row[a].second - f * piv[b].second;
        if (v != 0) out.emplace_back(row[a].first, v);
        ++a;
        ++b;
      }
    }
    row = std::move(out);
    i = 0;
  }
  return row;
}

int rational_rank(const std::vector<std::vector<Rational>>& rows) {
  if (rows.empty()) return 0;
  RatRref rref(static_cast<int>(rows.front().size()));
  for (const auto& r : rows) {
    SparseRatRow sr;
    for (size_t c = 0; c < r.size(); ++c) {
      if (r[c] != 0) sr.emplace_back(static_cast<int>(c), r[c]);
    }
    rref.add_row(std::move(sr));
  }
  return rref.rank();
}

int integer_rank(const std::vector<std::vector<mpz_class>>& rows) {
  IntRankEliminator elim;
  for (const auto& r : rows) {
    SparseIntRow sr;
    for (size_t c = 0; c < r.size(); ++c) {
      if (r[c] != 0) sr.emplace_back(static_cast<int>(c), r[c]);
    }
    elim.add_row(std::move(sr));
  }
  return elim.rank();
}

}  // namespace zc
