#include "zc/bivariate.hpp"

#include <stdexcept>

namespace zc {

BivariateSeries::BivariateSeries(int order, mpfr_prec_t prec) : order_(order), prec_(prec) {
  if (order < 0) throw std::invalid_argument("negative series order");
  c_.assign(static_cast<size_t>(order + 1) * (order + 2) / 2, BigReal(prec));
}

BivariateSeries BivariateSeries::constant(long value, int order, mpfr_prec_t prec) {
  BivariateSeries s(order, prec);
  s.set_coeff(0, 0, BigReal(value, prec));
  return s;
}

size_t BivariateSeries::idx(int i, int j) const {
  if (i < 0 || j < 0 || i + j > order_) throw std::out_of_range("series coefficient out of range");
  // Row-major over i, rows shrink as i grows.
  size_t offset = static_cast<size_t>(i) * (order_ + 1) - static_cast<size_t>(i) * (i - 1) / 2;
  return offset + static_cast<size_t>(j);
}

BivariateSeries& BivariateSeries::operator+=(const BivariateSeries& o) {
  if (o.order_ != order_) throw std::invalid_argument("order mismatch");
  for (size_t k = 0; k < c_.size(); ++k) c_[k] += o.c_[k];
  return *this;
}

BivariateSeries& BivariateSeries::operator-=(const BivariateSeries& o) {
  if (o.order_ != order_) throw std::invalid_argument("order mismatch");
  for (size_t k = 0; k < c_.size(); ++k) c_[k] -= o.c_[k];
  return *this;
}

BivariateSeries& BivariateSeries::operator*=(const BigReal& s) {
  for (auto& v : c_) v *= s;
  return *this;
}

BivariateSeries& BivariateSeries::operator/=(long s) {
  for (auto& v : c_) v /= s;
  return *this;
}

BivariateSeries operator*(const BivariateSeries& a, const BivariateSeries& b) {
  if (a.order() != b.order()) throw std::invalid_argument("order mismatch");
  const int n = a.order();
  BivariateSeries out(n, std::max(a.prec(), b.prec()));
  for (int i1 = 0; i1 <= n; ++i1) {
    for (int j1 = 0; i1 + j1 <= n; ++j1) {
      const BigReal& av = a.coeff(i1, j1);
      if (av.is_zero()) continue;
      for (int i2 = 0; i1 + j1 + i2 <= n; ++i2) {
        for (int j2 = 0; i1 + j1 + i2 + j2 <= n; ++j2) {
          const BigReal& bv = b.coeff(i2, j2);
          if (bv.is_zero()) continue;
          out.add_coeff(i1 + i2, j1 + j2, av * bv);
        }
      }
    }
  }
  return out;
}

BigReal BivariateSeries::max_abs() const {
  BigReal m(prec_);
  for (const auto& v : c_) m = max(m, abs(v));
  return m;
}

BivariateSeries exp_series(const BivariateSeries& s) {
  if (!s.coeff(0, 0).is_zero()) throw std::invalid_argument("exp_series needs zero constant term");
  BivariateSeries result = BivariateSeries::constant(1, s.order(), s.prec());
  BivariateSeries term = BivariateSeries::constant(1, s.order(), s.prec());
  for (int k = 1; k <= s.order(); ++k) {
    term = term * s;
    term /= k;
    result += term;
  }
  return result;
}

BivariateSeries inverse_one_plus(const BivariateSeries& s) {
  BivariateSeries u = s;
  u.set_coeff(0, 0, u.coeff(0, 0) - 1);
  if (!u.coeff(0, 0).is_zero()) {
    throw std::invalid_argument("inverse_one_plus needs constant term 1");
  }
  // 1/(1+u) = sum (-u)^k, exact at this truncation since u has no constant.
  BivariateSeries result = BivariateSeries::constant(1, s.order(), s.prec());
  BivariateSeries term = BivariateSeries::constant(1, s.order(), s.prec());
  for (int k = 1; k <= s.order(); ++k) {
    term = term * u;
    term *= BigReal(-1, s.prec());
    result += term;
  }
  return result;
}

}  // namespace zc
