#ifndef QINV_QCALC_HPP
#define QINV_QCALC_HPP

#include "qinv/poly.hpp"

namespace qinv {

/// [k]_q = 1 + q + ... + q^(k-1); [0]_q = 0.
QLaurent q_int(int k);

/// [k]_q! with [0]_q! = 1.
QLaurent q_factorial(int k);

/// Gaussian binomial; zero when k < 0 or k > n. Requires n >= 0.
QLaurent q_binomial(int n, int k);

/// (x;q)_n = prod_{i<n} (1 - x q^i) as a polynomial in x and q.
MultiPoly q_pochhammer_x(int n);

/// f(x) -> f(x q^j), i.e. x^a -> q^(a j) x^a.
MultiPoly dilate_x(const MultiPoly& f, int j = 1);

/// q-derivative in x: x^a -> [a]_q x^(a-1). Other variables are coefficients.
MultiPoly d_q(const MultiPoly& f);

/// q-exponential operator sum_k D_q^k / [k]_q!, realised as
/// x^a -> sum_k qbinom(a, k) x^k.
MultiPoly t_q(const MultiPoly& f);

/// Multiplies every term of `f` by the polynomial `c` in q (nonnegative exponents).
MultiPoly times_q_poly(const MultiPoly& f, const QLaurent& c);

}  // namespace qinv

#endif  // QINV_QCALC_HPP
