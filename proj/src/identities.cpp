#include "qinv/identities.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

#include "qinv/qcalc.hpp"
#include "qinv/qstirling.hpp"

namespace qinv {

Perm::Perm(std::vector<int> values) : values_(std::move(values)) {
  std::vector<int> sorted = values_;
  std::sort(sorted.begin(), sorted.end());
  for (std::size_t i = 0; i < sorted.size(); ++i) {
    if (sorted[i] != static_cast<int>(i) + 1) throw std::invalid_argument("Perm: not a permutation of 1..n");
  }
}

Perm Perm::identity(int n) {
  std::vector<int> v(static_cast<std::size_t>(std::max(n, 0)));
  std::iota(v.begin(), v.end(), 1);
  return Perm(std::move(v));
}

bool Perm::next() { return std::next_permutation(values_.begin(), values_.end()); }

int des(std::span<const int> sigma) {
  int d = 0;
  for (std::size_t i = 0; i + 1 < sigma.size(); ++i) d += sigma[i] > sigma[i + 1];
  return d;
}

int maj(std::span<const int> sigma) {
  int m = 0;
  for (std::size_t i = 0; i + 1 < sigma.size(); ++i) {
    if (sigma[i] > sigma[i + 1]) m += static_cast<int>(i) + 1;
  }
  return m;
}

int max_excedance_drop(std::span<const int> sigma) {
  int m = 0;
  for (std::size_t i = 0; i < sigma.size(); ++i) m = std::max(m, sigma[i] - static_cast<int>(i) - 1);
  return m;
}

MultiPoly euler_mahonian(int n) {
  if (n < 0 || n > 9) throw std::invalid_argument("euler_mahonian: n must lie in [0, 9]");
  std::map<std::pair<int, int>, long> counts;
  Perm p = Perm::identity(n);
  do {
    ++counts[{des(p.values()), maj(p.values())}];
  } while (p.next());
  MultiPoly r;
  for (const auto& [dm, c] : counts) r.add_term(Exponents{dm.first, 0, 0, 0, dm.second}, Integer(c));
  return r;
}

namespace {

// x^j [j]_q! * prod_{i=0}^{len-1} (1 - x q^{offset+i})
MultiPoly stirling_euler_term(const QLaurent& stirling, int j, int offset, int len) {
  MultiPoly factor(1L);
  for (int i = 0; i < len; ++i) factor *= MultiPoly(1L) - var(Var::x) * var(Var::q, offset + i);
  return times_q_poly(var(Var::x, j) * factor, stirling * q_factorial(j));
}

// [k][k-1]...[k-j+1]
QLaurent falling_q(int k, int j) {
  QLaurent r(1L);
  for (int i = 0; i < j; ++i) {
    if (k - i <= 0) return {};
    r *= q_int(k - i);
  }
  return r;
}

MultiPoly geometric_power_sum(int n, int truncation, int shift) {
  MultiPoly s;
  for (int l = 0; l <= truncation; ++l) {
    s += times_q_poly(var(Var::x, l), pow(q_int(l + shift), static_cast<unsigned>(n)));
  }
  return s;
}

}  // namespace

bool check_stirling_euler(int n) {
  if (n < 1) throw std::invalid_argument("check_stirling_euler: n must be positive");
  MultiPoly lhs;
  for (int j = 1; j <= n; ++j) lhs += stirling_euler_term(s_q(n, j), j, 0, n - j);
  return lhs == var(Var::x) * euler_mahonian(n);
}

bool check_garsia(int n) {
  if (n < 1) throw std::invalid_argument("check_garsia: n must be positive");
  MultiPoly lhs;
  for (int j = 1; j <= n; ++j) lhs += stirling_euler_term(s_milne(n, j), j, j + 1, n - j);
  return lhs == var(Var::x) * euler_mahonian(n);
}

bool check_qpower(int n, int kmax) {
  if (n < 1 || kmax < 1) throw std::invalid_argument("check_qpower: n and kmax must be positive");
  for (int k = 1; k <= kmax; ++k) {
    QLaurent rhs;
    for (int j = 1; j <= n; ++j) {
      rhs += s_q(n, j) * falling_q(k, j) * q_monomial((n - j) * (k - j));
    }
    if (rhs != pow(q_int(k), static_cast<unsigned>(n))) return false;
  }
  return true;
}

MultiPoly inverse_pochhammer_series(int m, int truncation) {
  MultiPoly r(1L);
  for (int i = 0; i < m; ++i) {
    // 1/(1 - x q^i) = sum_t x^t q^{i t}
    MultiPoly geo;
    for (int t = 0; t <= truncation; ++t) geo += var(Var::x, t) * var(Var::q, i * t);
    r = truncate_x(r * geo, truncation);
  }
  return r;
}

bool check_carlitz_against(const MultiPoly& a_n, int n, int truncation) {
  if (truncation < n + 2) throw std::invalid_argument("check_carlitz: truncation must be at least n + 2");
  const MultiPoly series = geometric_power_sum(n, truncation, 1);
  return truncate_x(q_pochhammer_x(n + 1) * series, truncation) == truncate_x(a_n, truncation);
}

bool check_carlitz(int n, int truncation) { return check_carlitz_against(euler_mahonian(n), n, truncation); }

bool check_eu_ma_operator(int n, int truncation) {
  if (n < 1) throw std::invalid_argument("check_eu_ma_operator: n must be positive");
  if (truncation < n + 2) throw std::invalid_argument("check_eu_ma_operator: truncation must be at least n + 2");
  MultiPoly lhs;
  for (int l = 0; l <= truncation; ++l) lhs += var(Var::x, l);
  for (int i = 0; i < n; ++i) lhs = var(Var::x) * d_q(lhs);
  const MultiPoly rhs =
      truncate_x(var(Var::x) * euler_mahonian(n) * inverse_pochhammer_series(n + 1, truncation), truncation);
  return lhs == rhs;
}

}  // namespace qinv
