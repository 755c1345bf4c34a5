#include "qinv/recurrence.hpp"

#include <mutex>
#include <stdexcept>

#include "qinv/qcalc.hpp"

namespace qinv {

MultiPoly next_F(const MultiPoly& fn, int n) {
  if (n < 1) throw std::invalid_argument("next_F: n must be positive");
  const MultiPoly y = var(Var::y);
  MultiPoly boundary = (var(Var::z) - MultiPoly(1L)) * monomial({n + 1, n, n - 1, 0, 0});
  return boundary + scaled_shift((y - MultiPoly(1L)) * fn + t_q(fn), n);
}

MultiPoly F(int n) {
  if (n < 1) throw std::invalid_argument("F: n must be positive");
  static std::mutex mu;
  static std::vector<MultiPoly> memo{var(Var::x)};
  std::lock_guard<std::mutex> lock(mu);
  while (static_cast<int>(memo.size()) < n) {
    const int m = static_cast<int>(memo.size());
    memo.push_back(next_F(memo.back(), m));
  }
  return memo[static_cast<std::size_t>(n - 1)];
}

MultiPoly product_formula(int n) {
  if (n < 1) throw std::invalid_argument("product_formula: n must be positive");
  MultiPoly r(1L);
  MultiPoly factor = var(Var::x);
  for (int m = 0; m < n; ++m) {
    if (m > 0) factor += var(Var::p, m);
    r *= factor;
  }
  return r;
}

std::vector<Integer> max_line_coeffs(int n) {
  const MultiPoly marginal =
      eval_partial(F(n), std::map<Var, long>{{Var::x, 1}, {Var::y, 1}, {Var::p, 1}, {Var::q, 1}});
  std::vector<Integer> out(static_cast<std::size_t>(n), 0);
  for (const auto& [e, c] : marginal) out.at(static_cast<std::size_t>(e[2])) = c;
  return out;
}

}  // namespace qinv
