#ifndef QINV_QSTIRLING_HPP
#define QINV_QSTIRLING_HPP

#include <vector>

#include "qinv/invseq.hpp"
#include "qinv/poly.hpp"

namespace qinv {

/// S_q(n,k) = q^{n-k} S_q(n-1,k-1) + [k]_q S_q(n-1,k), S_q(0,0) = 1.
QLaurent s_q(int n, int k);

/// Milne's family: S~(n+1,j) = [j] S~(n,j) + q^{j-1} S~(n,j-1), S~(1,1) = 1.
/// Zero for k <= 0 or k > n (in particular everywhere at n = 0).
QLaurent s_milne(int n, int k);

/// Leroux-Medicis family: S*(n+1,k) = [k] S*(n,k) + S*(n,k-1), S*(0,0) = 1.
QLaurent s_star(int n, int k);

/// Classical Stirling numbers of the second kind.
Integer stirling2(int n, int k);

/// An inversion sequence with k zeros and distinct nonzero entries, followed
/// by the ascending list of values in {1..n-1} it does not use.
class AugSeq {
 public:
  /// Throws std::invalid_argument unless `base` lies in some I_{n,k}.
  explicit AugSeq(InvSeq base);

  const InvSeq& base() const { return base_; }
  const std::vector<int>& excluded() const { return excluded_; }
  int zeros() const { return static_cast<int>(excluded_.size()) + 1; }

  /// "01003400.2567"
  std::string to_string() const;

 private:
  InvSeq base_;
  std::vector<int> excluded_;
};

/// inv of the concatenated word base . excluded.
int inv_aug(const AugSeq& a);

/// True when e has distinct nonzero entries (e lies in I_{n, noz(e)}).
bool has_distinct_nonzero(std::span<const int> e);

/// sum over I_{n,k} of q^{Inv}; n <= 9.
QLaurent s_q_via_invseq(int n, int k);

}  // namespace qinv

#endif  // QINV_QSTIRLING_HPP
