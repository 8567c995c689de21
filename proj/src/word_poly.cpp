#include "zc/word_poly.hpp"

#include <vector>

namespace zc {

WordPoly WordPoly::monomial(const Word& w, const Rational& coeff) {
  WordPoly p;
  p.add_term(w, coeff);
  return p;
}

Rational WordPoly::coeff(const Word& w) const {
  auto it = terms_.find(w);
  return it == terms_.end() ? Rational(0) : it->second;
}

void WordPoly::add_term(const Word& w, const Rational& coeff) {
  if (coeff == 0) return;
  auto [it, inserted] = terms_.emplace(w, coeff);
  if (!inserted) {
    it->second += coeff;
    if (it->second == 0) terms_.erase(it);
  }
}

WordPoly& WordPoly::operator+=(const WordPoly& o) {
  for (const auto& [w, c] : o.terms_) add_term(w, c);
  return *this;
}

WordPoly& WordPoly::operator-=(const WordPoly& o) {
  for (const auto& [w, c] : o.terms_) add_term(w, -c);
  return *this;
}

WordPoly& WordPoly::operator*=(const Rational& s) {
  if (s == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [w, c] : terms_) c *= s;
  return *this;
}

std::optional<int> WordPoly::homogeneous_weight() const {
  if (terms_.empty()) return std::nullopt;
  int w = terms_.begin()->first.size();
  for (const auto& [word, c] : terms_) {
    if (word.size() != w) return std::nullopt;
  }
  return w;
}

Rational WordPoly::coefficient_mass() const {
  Rational s = 0;
  for (const auto& [w, c] : terms_) s += c;
  return s;
}

std::string WordPoly::str() const {
  if (terms_.empty()) return "0";
  std::string out;
  bool first = true;
  // Descending word order matches the conventional rendering of shuffle
  // identities (highest interleaving multiplicity first).
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    const Rational& c = it->second;
    bool neg = c < 0;
    Rational a = neg ? Rational(-c) : c;
    if (first) {
      if (neg) out += "-";
      first = false;
    } else {
      out += neg ? " - " : " + ";
    }
    if (a != 1) out += format_rational(a) + "*";
    const Word& w = it->first;
    if (w.empty()) {
      out += "1";
    } else if (w.admissible()) {
      out += "Z(" + word_to_index(w).str() + ")";
    } else {
      out += "I(" + w.str() + ")";
    }
  }
  return out;
}

WordPoly shuffle_words(const Word& u, const Word& v) {
  const int nu = u.size(), nv = v.size();
  // table[i][j] = shuffle of u[i..] with v[j..]; filled bottom-up so each
  // interleaving multiplicity is merged once instead of enumerated.
  std::vector<std::vector<WordPoly>> table(nu + 1, std::vector<WordPoly>(nv + 1));
  for (int i = nu; i >= 0; --i) {
    for (int j = nv; j >= 0; --j) {
      if (i == nu && j == nv) {
        table[i][j] = WordPoly::unit();
        continue;
      }
      WordPoly p;
      if (i < nu) {
        for (const auto& [w, c] : table[i + 1][j].terms()) p.add_term(w.prepend(u.letter(i)), c);
      }
      if (j < nv) {
        for (const auto& [w, c] : table[i][j + 1].terms()) p.add_term(w.prepend(v.letter(j)), c);
      }
      table[i][j] = std::move(p);
    }
  }
  return table[0][0];
}

WordPoly poly_product(const WordPoly& p, const WordPoly& q) {
  WordPoly out;
  for (const auto& [u, cu] : p.terms()) {
    for (const auto& [v, cv] : q.terms()) {
      WordPoly s = shuffle_words(u, v);
      s *= cu * cv;
      out += s;
    }
  }
  return out;
}

}  // namespace zc
