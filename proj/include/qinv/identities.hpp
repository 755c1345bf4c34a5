#ifndef QINV_IDENTITIES_HPP
#define QINV_IDENTITIES_HPP

#include <span>
#include <vector>

#include "qinv/poly.hpp"

namespace qinv {

/// Default series truncation for the Carlitz and (x D_q)^n checks.
inline int default_truncation(int n) { return n + 8; }

/// A permutation of {1..n} in one-line notation.
class Perm {
 public:
  explicit Perm(std::vector<int> values);
  static Perm identity(int n);

  int size() const { return static_cast<int>(values_.size()); }
  std::span<const int> values() const { return values_; }

  /// Advances to the lexicographic successor; false after the last one.
  bool next();

 private:
  std::vector<int> values_;
};

int des(std::span<const int> sigma);
int maj(std::span<const int> sigma);

/// max_i (sigma_i - i) with 1-based positions.
int max_excedance_drop(std::span<const int> sigma);

/// A_n(x,q) = sum over S_n of x^des q^maj, by enumeration; n <= 9. A_0 = 1.
MultiPoly euler_mahonian(int n);

/// sum_j S_q(n,j) x^j (x;q)_{n-j} [j]_q! == x A_n(x,q).
bool check_stirling_euler(int n);

/// sum_j S~_q(n,j) x^j (x q^{j+1}; q)_{n-j} [j]_q! == x A_n(x,q), Milne's S~.
bool check_garsia(int n);

/// [k]^n == sum_j S_q(n,j) [k][k-1]...[k-j+1] q^{(n-j)(k-j)} for k = 1..kmax.
bool check_qpower(int n, int kmax);

/// A_n == (x;q)_{n+1} * sum_{l<=L} x^l [l+1]^n in x-degrees 0..L. Requires L >= n + 2.
bool check_carlitz(int n, int truncation);

/// As check_carlitz but against a caller-supplied A_n (negative controls).
bool check_carlitz_against(const MultiPoly& a_n, int n, int truncation);

/// (x D_q)^n sum_{l<=L} x^l == x A_n / (x;q)_{n+1} in x-degrees 0..L. Requires n >= 1, L >= n + 2.
bool check_eu_ma_operator(int n, int truncation);

/// 1/(x;q)_m expanded through x-degree L.
MultiPoly inverse_pochhammer_series(int m, int truncation);

}  // namespace qinv

#endif  // QINV_IDENTITIES_HPP
