#include "zc/lll.hpp"

#include <stdexcept>

namespace zc {

namespace {

mpz_class dot(const std::vector<mpz_class>& a, const std::vector<mpz_class>& b) {
  mpz_class s = 0;
  for (size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

}  // namespace

void lll_reduce(std::vector<std::vector<mpz_class>>& b, unsigned long delta_num,
                unsigned long delta_den) {
  const int n = static_cast<int>(b.size());
  if (n <= 1) return;
  const size_t m = b[0].size();
  for (const auto& row : b) {
    if (row.size() != m) throw std::invalid_argument("ragged lattice basis");
  }

  // 1-indexed Gram-Schmidt bookkeeping (Cohen, Algorithm 2.6.7).
  std::vector<mpz_class> d(static_cast<size_t>(n) + 1);
  std::vector<std::vector<mpz_class>> lam(static_cast<size_t>(n) + 1,
                                          std::vector<mpz_class>(static_cast<size_t>(n) + 1));
  d[0] = 1;

  auto gram_row = [&](int k) {
    for (int j = 1; j <= k; ++j) {
      mpz_class u = dot(b[static_cast<size_t>(k - 1)], b[static_cast<size_t>(j - 1)]);
      for (int i = 1; i < j; ++i) {
        u = (d[static_cast<size_t>(i)] * u -
             lam[static_cast<size_t>(k)][static_cast<size_t>(i)] *
                 lam[static_cast<size_t>(j)][static_cast<size_t>(i)]) /
            d[static_cast<size_t>(i - 1)];
      }
      if (j < k) {
        lam[static_cast<size_t>(k)][static_cast<size_t>(j)] = u;
      } else {
        d[static_cast<size_t>(k)] = u;
        if (u == 0) throw std::invalid_argument("lattice rows are linearly dependent");
      }
    }
  };

  auto redi = [&](int k, int l) {
    // Make |lambda_{k,l}| <= d_l / 2.
    mpz_class two_lam = 2 * lam[static_cast<size_t>(k)][static_cast<size_t>(l)];
    if (abs(two_lam) <= d[static_cast<size_t>(l)]) return;
    mpz_class q, num = two_lam + d[static_cast<size_t>(l)], den = 2 * d[static_cast<size_t>(l)];
    mpz_fdiv_q(q.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
    if (q == 0) return;
    auto& bk = b[static_cast<size_t>(k - 1)];
    const auto& bl = b[static_cast<size_t>(l - 1)];
    for (size_t i = 0; i < m; ++i) bk[i] -= q * bl[i];
    lam[static_cast<size_t>(k)][static_cast<size_t>(l)] -= q * d[static_cast<size_t>(l)];
    for (int i = 1; i < l; ++i) {
      lam[static_cast<size_t>(k)][static_cast<size_t>(i)] -=
          q * lam[static_cast<size_t>(l)][static_cast<size_t>(i)];
    }
  };

  auto swap_step = [&](int k) {
    std::swap(b[static_cast<size_t>(k - 1)], b[static_cast<size_t>(k - 2)]);
    for (int j = 1; j <= k - 2; ++j) {
      std::swap(lam[static_cast<size_t>(k)][static_cast<size_t>(j)],
                lam[static_cast<size_t>(k - 1)][static_cast<size_t>(j)]);
    }
    mpz_class lambda = lam[static_cast<size_t>(k)][static_cast<size_t>(k - 1)];
    mpz_class bnew =
        (d[static_cast<size_t>(k - 2)] * d[static_cast<size_t>(k)] + lambda * lambda) /
        d[static_cast<size_t>(k - 1)];
    for (int i = k + 1; i <= n; ++i) {
      mpz_class t = lam[static_cast<size_t>(i)][static_cast<size_t>(k)];
      lam[static_cast<size_t>(i)][static_cast<size_t>(k)] =
          (d[static_cast<size_t>(k)] * lam[static_cast<size_t>(i)][static_cast<size_t>(k - 1)] -
           lambda * t) /
          d[static_cast<size_t>(k - 1)];
      lam[static_cast<size_t>(i)][static_cast<size_t>(k - 1)] =
          (bnew * t + lambda * lam[static_cast<size_t>(i)][static_cast<size_t>(k)]) /
          d[static_cast<size_t>(k)];
    }
    d[static_cast<size_t>(k - 1)] = bnew;
  };

  gram_row(1);
  int k = 2;
  int kmax = 1;
  while (k <= n) {
    if (k > kmax) {
      kmax = k;
      gram_row(k);
    }
    redi(k, k - 1);
    // Lovasz: swap when delta_den (d_k d_{k-2} + lambda^2) < delta_num d_{k-1}^2.
    const mpz_class& lambda = lam[static_cast<size_t>(k)][static_cast<size_t>(k - 1)];
    mpz_class lhs = (d[static_cast<size_t>(k)] * d[static_cast<size_t>(k - 2)] +
                     lambda * lambda) *
                    delta_den;
    mpz_class rhs = d[static_cast<size_t>(k - 1)] * d[static_cast<size_t>(k - 1)] * delta_num;
    if (lhs < rhs) {
      swap_step(k);
      k = k > 3 ? k - 1 : 2;
    } else {
      for (int l = k - 2; l >= 1; --l) redi(k, l);
      ++k;
    }
  }
}

}  // namespace zc
