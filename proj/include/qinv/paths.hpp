#ifndef QINV_PATHS_HPP
#define QINV_PATHS_HPP

#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "qinv/invseq.hpp"
#include "qinv/poly.hpp"

namespace qinv {

/// Lattice path from (0,0) to (n,n) with E/N steps, never above y = x.
class LatticePath {
 public:
  /// Throws std::invalid_argument for anything but a valid E/N word.
  explicit LatticePath(std::string steps);

  int semilength() const { return static_cast<int>(steps_.size() / 2); }
  const std::string& steps() const { return steps_; }
  const std::string& to_string() const { return steps_; }

  /// E -> U, N -> D.
  std::string dyck_word() const;

  friend auto operator<=>(const LatticePath&, const LatticePath&) = default;

 private:
  std::string steps_;
};

struct DyckStats {
  int peaks = 0;
  int valleys = 0;
  int returns = 0;
  int first_peak_height = 0;
  int last_peak_height = 0;
};

bool is_weakly_increasing(const InvSeq& e);

/// E N^{e_1-e_0} E N^{e_2-e_1} ... E N^{n-e_{n-1}}; throws unless e is weakly increasing.
LatticePath phi(const InvSeq& e);

/// e_i = height before the (i+1)-st east step.
InvSeq phi_inv(const LatticePath& path);

DyckStats dyck_stats(const LatticePath& path);

/// Reverse the word and exchange E with N.
LatticePath reverse_swap(const LatticePath& path);

/// All of D_n in lexicographic order (E < N).
std::vector<LatticePath> all_paths(int n);

/// The weakly increasing members of I_n, generated directly.
std::vector<InvSeq> weakly_increasing(int n);

/**
 * Sign-reversing involution on I_n.
 *
 * Scans i = n-1 down to 1: e_i == i steps to i-1; e_i == e_{i-1} steps to
 * i-2; otherwise e_{i-1} and e_i are swapped and the scan stops.
 */
InvSeq tau(const InvSeq& e);

/// a(1) = 1, a(2) = 2, a(n) = a(n-1) + (n-1) a(n-2).
Integer involution_count(int n);

Integer catalan(int n);

/// N(n,k) = C(n,k+1) C(n,k) / n.
Integer narayana(int n, int k);

/**
 * Dyck paths of semilength n with k returns, rows 1..n_max from
 * t(n,k) = t(n-1,k-1) + t(n,k+1), t(1,1) = 1. Entry [n][k] for 1 <= k <= n.
 */
std::vector<std::vector<Integer>> returns_triangle(int n_max);

/// Coefficients H(n,k), k = 0..2n, of f_n(x,x) = x F_n(x;1,x,1,0).
std::vector<Integer> first_last_peak_row(int n);

}  // namespace qinv

#endif  // QINV_PATHS_HPP
