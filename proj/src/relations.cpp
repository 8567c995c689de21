#include "zc/relations.hpp"

#include <algorithm>
#include <memory>
#include <mutex>
#include <stdexcept>

#include "zc/lll.hpp"
#include "zc/parallel.hpp"

namespace zc {

namespace {

const QuotientStructure& quotient_for(int weight) {
  static std::map<int, std::unique_ptr<QuotientStructure>> cache;
  static std::mutex mutex;
  std::lock_guard<std::mutex> lock(mutex);
  auto it = cache.find(weight);
  if (it == cache.end()) {
    it = cache.emplace(weight, std::make_unique<QuotientStructure>(weight)).first;
  }
  return *it->second;
}

long default_digits(int weight) { return 25 + 15L * weight; }

BigReal acceptance_threshold(long digits, mpfr_prec_t prec) {
  return BigReal::pow10(-(digits / 2), prec);
}

void normalize_coeffs(std::vector<mpz_class>& v) {
  mpz_class g = 0;
  for (const auto& x : v) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), x.get_mpz_t());
  if (g == 0) return;
  for (const auto& x : v) {
    if (x != 0) {
      if (x < 0) g = -g;
      break;
    }
  }
  if (g != 1) {
    for (auto& x : v) mpz_divexact(x.get_mpz_t(), x.get_mpz_t(), g.get_mpz_t());
  }
}

std::vector<std::vector<Rational>> coeff_rows(const std::vector<RelationCandidate>& cands) {
  std::vector<std::vector<Rational>> rows;
  rows.reserve(cands.size());
  for (const auto& c : cands) {
    std::vector<Rational> r;
    r.reserve(c.coeffs.size());
    for (const auto& v : c.coeffs) r.emplace_back(v);
    rows.push_back(std::move(r));
  }
  return rows;
}

}  // namespace

void RelationCandidate::validate() const {
  if (coeffs.size() != basis.size()) throw std::invalid_argument("coefficient/basis size mismatch");
  mpz_class g = 0;
  bool nonzero = false;
  for (const auto& v : coeffs) {
    if (v != 0) nonzero = true;
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), v.get_mpz_t());
  }
  if (!nonzero) throw std::invalid_argument("zero relation vector");
  if (g != 1) throw std::invalid_argument("relation coefficients are not primitive");
}

const std::vector<Index>& weight8_reference_basis() {
  static const std::vector<Index> basis = {
      Index({8}),          Index({6, 2}),       Index({5, 1, 2}),    Index({4, 4}),
      Index({4, 2, 2}),    Index({4, 1, 3}),    Index({4, 1, 1, 2}), Index({3, 5}),
      Index({3, 1, 2, 2}), Index({3, 1, 1, 3}), Index({2, 6}),       Index({2, 4, 2}),
      Index({2, 3, 3}),    Index({2, 2, 4}),    Index({2, 2, 2, 2}), Index({2, 2, 1, 3}),
      Index({2, 1, 5}),    Index({2, 1, 3, 2}), Index({2, 1, 2, 3}), Index({2, 1, 1, 4}),
      Index({2, 1, 1, 1, 3}), Index({1, 7}),    Index({1, 4, 3}),    Index({1, 3, 4}),
      Index({1, 3, 1, 3}), Index({1, 2, 5}),    Index({1, 2, 2, 3}), Index({1, 2, 1, 4}),
      Index({1, 1, 6}),    Index({1, 1, 2, 4}), Index({1, 1, 1, 5})};
  return basis;
}

std::vector<Word> relation_basis(int weight) {
  if (weight == 8) {
    std::vector<Word> words;
    words.reserve(weight8_reference_basis().size());
    for (const Index& idx : weight8_reference_basis()) words.push_back(index_to_word(idx));
    return words;
  }
  return quotient_for(weight).basis();
}

ValueMatrix value_matrix(int weight, const std::vector<Rational>& samples, long digits,
                         unsigned jobs) {
  if (weight < 2) throw std::invalid_argument("relations need weight >= 2");
  for (const Rational& c : samples) {
    if (!(c < 1)) throw std::invalid_argument("sample c must satisfy c < 1");
  }
  ValueMatrix vm;
  vm.weight = weight;
  vm.basis = relation_basis(weight);
  vm.samples = samples;
  vm.digits = digits > 0 ? digits : default_digits(weight);
  const mpfr_prec_t prec = bits_for_digits(vm.digits + 10);

  const size_t n = vm.basis.size(), s = samples.size();
  vm.rows.assign(n, std::vector<BigReal>(s, BigReal(prec)));
  parallel_for(n * s, jobs, [&](size_t k) {
    size_t i = k / s, j = k % s;
    EvalConfig cfg;
    cfg.c = samples[j];
    cfg.precision = prec;
    vm.rows[i][j] = evaluate_word(vm.basis[i], cfg);
  });
  return vm;
}

std::vector<RelationCandidate> find_relations(int weight, const RelationSearchConfig& cfg) {
  // The search means "simultaneously at the classical specializations and at
  // generic parameters": both anchors must be present, plus a third sample.
  bool has_zero = false, has_minus_one = false;
  for (const Rational& c : cfg.samples) {
    if (c == 0) has_zero = true;
    if (c == -1) has_minus_one = true;
  }
  if (cfg.samples.size() < 3 || !has_zero || !has_minus_one) {
    throw std::invalid_argument(
        "relation discovery needs at least 3 samples including 0 and -1");
  }
  if (cfg.height_bound < 1) throw std::invalid_argument("height bound must be >= 1");

  ValueMatrix vm = value_matrix(weight, cfg.samples, cfg.digits, cfg.jobs);
  const size_t n = vm.basis.size(), s = vm.samples.size();
  const mpfr_prec_t prec = bits_for_digits(vm.digits + 10);

  mpz_class scale;
  mpz_ui_pow_ui(scale.get_mpz_t(), 10, static_cast<unsigned long>(vm.digits));
  BigReal scale_r(prec);
  mpfr_set_z(scale_r.raw(), scale.get_mpz_t(), MPFR_RNDN);

  std::vector<std::vector<mpz_class>> lattice(n, std::vector<mpz_class>(n + s));
  for (size_t i = 0; i < n; ++i) {
    lattice[i][i] = 1;
    for (size_t j = 0; j < s; ++j) {
      lattice[i][n + j] = (vm.rows[i][j] * scale_r).round_to_integer();
    }
  }
  lll_reduce(lattice);

  const BigReal threshold = acceptance_threshold(vm.digits, prec);
  std::vector<Index> basis_indices;
  basis_indices.reserve(n);
  for (const Word& w : vm.basis) basis_indices.push_back(word_to_index(w));

  std::vector<RelationCandidate> accepted;
  std::vector<std::vector<Rational>> accepted_rows;
  for (const auto& row : lattice) {
    std::vector<mpz_class> coeffs(row.begin(), row.begin() + static_cast<long>(n));
    mpz_class height = 0;
    bool nonzero = false;
    for (const auto& v : coeffs) {
      if (v != 0) nonzero = true;
      mpz_class a = abs(v);
      if (a > height) height = a;
    }
    if (!nonzero || height > cfg.height_bound) continue;

    std::vector<BigReal> residuals;
    residuals.reserve(s);
    bool ok = true;
    for (size_t j = 0; j < s && ok; ++j) {
      BigReal r(prec);
      for (size_t i = 0; i < n; ++i) {
        if (coeffs[i] == 0) continue;
        BigReal m(prec);
        mpfr_set_z(m.raw(), coeffs[i].get_mpz_t(), MPFR_RNDN);
        r += m * vm.rows[i][j];
      }
      if (abs(r) >= threshold) ok = false;
      residuals.push_back(std::move(r));
    }
    if (!ok) continue;

    normalize_coeffs(coeffs);
    // Keep only rows that enlarge the rational span.
    std::vector<Rational> as_rat;
    as_rat.reserve(n);
    for (const auto& v : coeffs) as_rat.emplace_back(v);
    accepted_rows.push_back(as_rat);
    if (rational_rank(accepted_rows) == static_cast<int>(accepted_rows.size() - 1)) {
      accepted_rows.pop_back();
      continue;
    }

    RelationCandidate cand;
    cand.weight = weight;
    cand.basis = basis_indices;
    cand.coeffs = std::move(coeffs);
    for (size_t j = 0; j < s; ++j) {
      cand.residuals[format_rational(vm.samples[j])] = residuals[j].to_string(5);
    }
    cand.validate();
    accepted.push_back(std::move(cand));
  }
  return accepted;
}

VerifyReport verify_relation(const RelationCandidate& cand, const std::vector<Rational>& samples,
                             long digits, unsigned jobs) {
  cand.validate();
  const mpfr_prec_t prec = bits_for_digits(digits + 10);
  const BigReal threshold = acceptance_threshold(digits, prec);

  VerifyReport report;
  report.threshold = threshold.to_string(3);
  std::vector<BigReal> residuals(samples.size(), BigReal(prec));
  parallel_for(samples.size(), jobs, [&](size_t j) {
    EvalConfig cfg;
    cfg.c = samples[j];
    cfg.precision = prec;
    BigReal r(prec);
    for (size_t i = 0; i < cand.basis.size(); ++i) {
      if (cand.coeffs[i] == 0) continue;
      BigReal m(prec);
      mpfr_set_z(m.raw(), cand.coeffs[i].get_mpz_t(), MPFR_RNDN);
      r += m * evaluate_index(cand.basis[i], cfg);
    }
    residuals[j] = std::move(r);
  });
  report.pass = true;
  for (size_t j = 0; j < samples.size(); ++j) {
    if (!(abs(residuals[j]) < threshold)) report.pass = false;
    report.residuals[format_rational(samples[j])] = residuals[j].to_string(5);
  }
  return report;
}

DimensionEstimate dimension_estimate(int weight, const RelationSearchConfig& cfg) {
  std::vector<RelationCandidate> rels = find_relations(weight, cfg);
  DimensionEstimate est;
  est.weight = weight;
  est.basis_size = static_cast<int>(relation_basis(weight).size());
  est.relation_rank = relation_rank(rels);
  est.dimension = est.basis_size - est.relation_rank;
  return est;
}

int relation_rank(const std::vector<RelationCandidate>& candidates) {
  if (candidates.empty()) return 0;
  return rational_rank(coeff_rows(candidates));
}

bool span_contains(const std::vector<RelationCandidate>& candidates,
                   const std::vector<Rational>& target) {
  std::vector<std::vector<Rational>> rows = coeff_rows(candidates);
  int base = rational_rank(rows);
  rows.push_back(target);
  return rational_rank(rows) == base;
}

std::vector<Rational> combination_over_basis(int weight,
                                             const std::vector<std::pair<Index, long>>& terms) {
  WordPoly poly;
  for (const auto& [idx, coeff] : terms) poly.add_term(index_to_word(idx), Rational(coeff));
  const QuotientStructure& q = quotient_for(weight);
  std::vector<Rational> over_quotient = q.reduce_to_basis(poly);

  const std::vector<Word> basis = relation_basis(weight);
  if (basis == q.basis()) return over_quotient;

  // Change of basis: express each relation-basis word over the quotient
  // basis, then solve for the coordinates by elimination.
  const size_t n = basis.size();
  std::vector<std::vector<Rational>> cols(n);
  for (size_t i = 0; i < n; ++i) cols[i] = q.reduce_to_basis(WordPoly::monomial(basis[i]));

  // Solve sum_i x_i cols[i] = over_quotient by Gaussian elimination on the
  // (n x n) transpose system.
  std::vector<std::vector<Rational>> a(n, std::vector<Rational>(n + 1));
  for (size_t r = 0; r < n; ++r) {
    for (size_t i = 0; i < n; ++i) a[r][i] = cols[i][r];
    a[r][n] = over_quotient[r];
  }
  for (size_t col = 0, row = 0; col < n && row < n; ++col) {
    size_t piv = row;
    while (piv < n && a[piv][col] == 0) ++piv;
    if (piv == n) throw std::logic_error("relation basis is not a quotient basis");
    std::swap(a[piv], a[row]);
    Rational lead = a[row][col];
    for (size_t j = col; j <= n; ++j) a[row][j] /= lead;
    for (size_t r = 0; r < n; ++r) {
      if (r == row || a[r][col] == 0) continue;
      Rational f = a[r][col];
      for (size_t j = col; j <= n; ++j) a[r][j] -= f * a[row][j];
    }
    ++row;
  }
  std::vector<Rational> x(n);
  for (size_t i = 0; i < n; ++i) x[i] = a[i][n];
  return x;
}

}  // namespace zc
