#ifndef QINV_RECURRENCE_HPP
#define QINV_RECURRENCE_HPP

#include <vector>

#include "qinv/poly.hpp"

namespace qinv {

/**
 * One step of the F_n recurrence:
 *
 *   F_{n+1} = (z-1) z^{n-1} y^n x^{n+1} + p^n x [ (y-1) F_n(x/p) + T_q(F_n)(x/p) ].
 *
 * `fn` must be F_n. A polynomial that is not leaves the ring under the
 * x -> x/p substitution and std::domain_error propagates.
 */
MultiPoly next_F(const MultiPoly& fn, int n);

/// F_n from F_1 = x. Results are cached process-wide (thread-safe).
MultiPoly F(int n);

/// (p^{n-1} + ... + p + x) ... (p + x) x.
MultiPoly product_formula(int n);

/// M(n, j) = [z^j] F_n(1; 1, z, 1, 1) for j = 0..n-1, by coefficient extraction.
/// Agrees with (n-j-1)! [(n-j)^{j+1} - (n-j-1)^{j+1}]. Reversed, the row counts
/// permutations of [n] by max(s_i - i).
std::vector<Integer> max_line_coeffs(int n);

}  // namespace qinv

#endif  // QINV_RECURRENCE_HPP
