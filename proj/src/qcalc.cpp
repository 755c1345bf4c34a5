#include "qinv/qcalc.hpp"

#include <mutex>
#include <stdexcept>
#include <vector>

namespace qinv {

namespace {

// Rows of the Gaussian triangle, grown on demand.
class QBinomialTable {
 public:
  QLaurent get(int n, int k) {
    std::lock_guard<std::mutex> lock(mu_);
    while (static_cast<int>(rows_.size()) <= n) extend();
    return rows_[n][k];
  }

 private:
  void extend() {
    const int n = static_cast<int>(rows_.size());
    std::vector<QLaurent> row(n + 1);
    row[0] = QLaurent(1L);
    row[n] = QLaurent(1L);
    for (int k = 1; k < n; ++k) {
      // qbinom(n,k) = qbinom(n-1,k-1) + q^k qbinom(n-1,k)
      row[k] = rows_[n - 1][k - 1] + shift_q(rows_[n - 1][k], k);
    }
    rows_.push_back(std::move(row));
  }

  std::mutex mu_;
  std::vector<std::vector<QLaurent>> rows_;
};

QBinomialTable& qbinomial_table() {
  static QBinomialTable table;
  return table;
}

}  // namespace

QLaurent q_int(int k) {
  if (k < 0) throw std::invalid_argument("q_int: negative argument");
  QLaurent r;
  for (int i = 0; i < k; ++i) r.add_term(i, 1);
  return r;
}

QLaurent q_factorial(int k) {
  if (k < 0) throw std::invalid_argument("q_factorial: negative argument");
  QLaurent r(1L);
  for (int i = 2; i <= k; ++i) r *= q_int(i);
  return r;
}

QLaurent q_binomial(int n, int k) {
  if (n < 0) throw std::invalid_argument("q_binomial: negative upper index");
  if (k < 0 || k > n) return {};
  return qbinomial_table().get(n, k);
}

MultiPoly q_pochhammer_x(int n) {
  if (n < 0) throw std::invalid_argument("q_pochhammer_x: negative length");
  MultiPoly r(1L);
  for (int i = 0; i < n; ++i) r *= MultiPoly(1L) - var(Var::x) * var(Var::q, i);
  return r;
}

MultiPoly dilate_x(const MultiPoly& f, int j) {
  MultiPoly r;
  for (const auto& [e, c] : f) {
    Exponents s = e;
    s[4] += e[0] * j;
    r.add_term(s, c);
  }
  return r;
}

MultiPoly times_q_poly(const MultiPoly& f, const QLaurent& c) {
  MultiPoly r;
  for (const auto& [e, a] : f) {
    for (const auto& [k, b] : c) {
      Exponents s = e;
      s[4] += k;
      if (s[4] < 0) throw std::domain_error("times_q_poly: negative q exponent");
      r.add_term(s, a * b);
    }
  }
  return r;
}

MultiPoly d_q(const MultiPoly& f) {
  MultiPoly r;
  for (const auto& [e, c] : f) {
    if (e[0] == 0) continue;
    Exponents s = e;
    s[0] -= 1;
    for (int i = 0; i < e[0]; ++i) {
      Exponents t = s;
      t[4] += i;
      r.add_term(t, c);
    }
  }
  return r;
}

MultiPoly t_q(const MultiPoly& f) {
  MultiPoly r;
  for (const auto& [e, c] : f) {
    const int a = e[0];
    for (int k = 0; k <= a; ++k) {
      for (const auto& [qe, b] : q_binomial(a, k)) {
        Exponents s = e;
        s[0] = k;
        s[4] += qe;
        r.add_term(s, c * b);
      }
    }
  }
  return r;
}

}  // namespace qinv
