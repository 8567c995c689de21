#include "zc/quotient.hpp"

#include <algorithm>
#include <stdexcept>

namespace zc {

namespace {

struct ColumnOrder {
  std::vector<Word> words;  // lex order
  std::vector<int> perm;    // permuted column -> lex position
  std::vector<int> pos;     // lex position -> permuted column
};

// Non-canonical words first (they carry the pair generators' leading
// entries), canonical representatives last, lex within each block. The
// elimination then pivots away non-canonical columns preferentially, leaving
// a basis of canonical representatives.
ColumnOrder column_order(int weight) {
  ColumnOrder co;
  co.words = enumerate_admissible(weight);
  const int n = static_cast<int>(co.words.size());
  co.perm.reserve(n);
  for (int i = 0; i < n; ++i) {
    if (canonical_rep(co.words[i]) != co.words[i]) co.perm.push_back(i);
  }
  for (int i = 0; i < n; ++i) {
    if (canonical_rep(co.words[i]) == co.words[i]) co.perm.push_back(i);
  }
  co.pos.assign(n, -1);
  for (int c = 0; c < n; ++c) co.pos[co.perm[c]] = c;
  return co;
}

SparseIntRow integer_row(const WordPoly& poly, const std::vector<int>& pos) {
  std::vector<std::pair<int, mpz_class>> entries;
  entries.reserve(poly.size());
  for (const auto& [w, c] : poly.terms()) {
    if (c.get_den() != 1) throw std::logic_error("ideal generator with non-integer coefficient");
    entries.emplace_back(pos[admissible_position(w)], c.get_num());
  }
  std::sort(entries.begin(), entries.end(),
            [](const auto& a, const auto& b) { return a.first < b.first; });
  return entries;
}

}  // namespace

std::vector<WordPoly> ideal_generators(int n) {
  if (n < 2) throw std::invalid_argument("ideal degree must be >= 2");
  std::vector<WordPoly> out;
  for (int m = 3; m <= n; ++m) {
    std::vector<Word> lowers = enumerate_admissible(n - m);
    if (lowers.empty()) continue;
    for (const Word& w : enumerate_admissible(m)) {
      Word d = dual(w);
      if (d == w || d < w) continue;  // one generator per pair
      WordPoly g = WordPoly::monomial(w) - WordPoly::monomial(d);
      for (const Word& v : lowers) {
        out.push_back(poly_product(g, WordPoly::monomial(v)));
      }
    }
  }
  return out;
}

int graded_ideal_rank(int n) {
  if (n < 2) return 0;
  ColumnOrder co = column_order(n);
  std::vector<WordPoly> gens = ideal_generators(n);
  std::vector<SparseIntRow> rows;
  rows.reserve(gens.size());
  for (const WordPoly& g : gens) rows.push_back(integer_row(g, co.pos));
  std::stable_sort(rows.begin(), rows.end(),
                   [](const SparseIntRow& a, const SparseIntRow& b) { return a.size() < b.size(); });
  IntRankEliminator elim;
  for (auto& r : rows) elim.add_row(std::move(r));
  return elim.rank();
}

BdimTable bdim_table(int max_weight) {
  if (max_weight < 0) throw std::invalid_argument("negative weight");
  BdimTable t;
  t.dims.resize(max_weight + 1, 0);
  t.ranks.resize(max_weight + 1, 0);
  for (int n = 0; n <= max_weight; ++n) {
    if (n == 0) {
      t.dims[n] = 1;
    } else if (n == 1) {
      t.dims[n] = 0;
    } else {
      t.ranks[n] = graded_ideal_rank(n);
      t.dims[n] = (1L << (n - 2)) - t.ranks[n];
    }
  }
  return t;
}

QuotientStructure::QuotientStructure(int weight) : weight_(weight), rref_(0) {
  if (weight < 2) throw std::invalid_argument("quotient structure needs weight >= 2");
  ColumnOrder co = column_order(weight);
  words_ = std::move(co.words);
  perm_ = std::move(co.perm);
  pos_ = std::move(co.pos);
  rref_ = RatRref(static_cast<int>(words_.size()));

  std::vector<WordPoly> gens = ideal_generators(weight);
  std::vector<SparseRatRow> rows;
  rows.reserve(gens.size());
  for (const WordPoly& g : gens) rows.push_back(to_permuted_row(g));
  std::stable_sort(rows.begin(), rows.end(),
                   [](const SparseRatRow& a, const SparseRatRow& b) { return a.size() < b.size(); });
  for (auto& r : rows) rref_.add_row(std::move(r));
  rref_.finalize();

  basis_index_of_col_.assign(words_.size(), -1);
  std::vector<std::pair<Word, int>> basis_cols;
  for (int col : rref_.free_columns()) basis_cols.emplace_back(words_[perm_[col]], col);
  std::sort(basis_cols.begin(), basis_cols.end(),
            [](const auto& a, const auto& b) { return a.first < b.first; });
  basis_.reserve(basis_cols.size());
  for (size_t i = 0; i < basis_cols.size(); ++i) {
    basis_.push_back(basis_cols[i].first);
    basis_index_of_col_[basis_cols[i].second] = static_cast<int>(i);
  }
}

SparseRatRow QuotientStructure::to_permuted_row(const WordPoly& poly) const {
  SparseRatRow row;
  row.reserve(poly.size());
  for (const auto& [w, c] : poly.terms()) {
    if (w.size() != weight_) {
      throw std::invalid_argument("polynomial is not homogeneous of weight " +
                                  std::to_string(weight_));
    }
    row.emplace_back(pos_[admissible_position(w)], c);
  }
  std::sort(row.begin(), row.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
  return row;
}

std::vector<Rational> QuotientStructure::reduce_to_basis(const WordPoly& poly) const {
  std::vector<Rational> coords(basis_.size(), Rational(0));
  SparseRatRow residue = rref_.reduce(to_permuted_row(poly));
  for (const auto& [col, v] : residue) {
    int b = basis_index_of_col_[col];
    if (b < 0) throw std::logic_error("residue touched a pivot column");
    coords[static_cast<size_t>(b)] = v;
  }
  return coords;
}

bool QuotientStructure::validates_basis(const std::vector<Word>& candidate) const {
  if (candidate.size() != basis_.size()) return false;
  std::vector<std::vector<Rational>> coords;
  coords.reserve(candidate.size());
  for (const Word& w : candidate) {
    if (w.size() != weight_ || !w.admissible()) return false;
    coords.push_back(reduce_to_basis(WordPoly::monomial(w)));
  }
  return rational_rank(coords) == static_cast<int>(basis_.size());
}

}  // namespace zc
