#ifndef QINV_QOPERATOR_HPP
#define QINV_QOPERATOR_HPP

#include <compare>
#include <functional>
#include <map>
#include <string>
#include <vector>

#include "qinv/poly.hpp"

namespace qinv {

/// g_i^{(j)}(x) = (D_q^i g)(x q^j), and likewise f_k^{(j)}.
struct SymFactor {
  enum class Kind : int { G = 0, F = 1 };

  Kind kind = Kind::G;
  int deriv = 0;
  int shift = 0;

  static SymFactor g(int deriv, int shift = 0) { return {Kind::G, deriv, shift}; }
  static SymFactor f(int deriv, int shift = 0) { return {Kind::F, deriv, shift}; }

  friend auto operator<=>(const SymFactor&, const SymFactor&) = default;
};

/// Factors in written order; products are never reordered.
using Word = std::vector<SymFactor>;

/// Formal sum of words with QLaurent coefficients.
class SymExpr {
 public:
  using term_map = std::map<Word, QLaurent>;

  SymExpr() = default;
  static SymExpr single(Word w, const QLaurent& c = QLaurent(1L));

  const term_map& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }
  auto begin() const { return terms_.begin(); }
  auto end() const { return terms_.end(); }

  QLaurent coeff(const Word& w) const;
  void add_term(const Word& w, const QLaurent& c);

  SymExpr& operator+=(const SymExpr& o);
  friend SymExpr operator+(SymExpr a, const SymExpr& b) { return a += b; }
  friend bool operator==(const SymExpr&, const SymExpr&) = default;

 private:
  term_map terms_;
};

/// D_q of a word by the q-Leibniz rule: differentiate one factor (gaining
/// q^shift) and dilate every factor to its right by q.
SymExpr d_q(const Word& w, const QLaurent& c = QLaurent(1L));
SymExpr d_q(const SymExpr& expr);

/// Left multiplication of every word by g = g_0^{(0)}, with extra coefficient `c`.
SymExpr times_g(const SymExpr& expr, const QLaurent& c = QLaurent(1L));

/// One application of g D_q. Every word must end in its single F factor.
SymExpr apply_gdq(const SymExpr& expr);

/// (g D_q)^n f by n applications of apply_gdq to f_0^{(0)}.
SymExpr gdq_power(int n);

/// (g D_q)^n f summed over I_n, one word per inversion sequence; n <= 9.
SymExpr expand_via_invseq(int n);

/// The coefficient of f_k^{(n-k)} in `expr`, with that factor stripped.
SymExpr lnk_from_expansion(const SymExpr& expr, int n, int k);

/// L_{n,k}(q) from the sum over compositions with q-binomial weights.
SymExpr lnk_explicit(int n, int k);

/// L_{n,k}(q) from L_{n+1,k} = g D_q L_{n,k} + g q^{n-k+1} L_{n,k-1}, L_{0,0} = 1.
SymExpr lnk_recurrence(int n, int k);

/// Value assigned to g_i^{(j)}.
using GRule = std::function<MultiPoly(int deriv, int shift)>;

/// g(x) = x: g_0^{(j)} = q^j x, g_1^{(j)} = 1, higher derivatives vanish.
GRule g_is_x();

/// Sum of coefficient times the product of rule values. F factors throw.
MultiPoly specialize_g(const SymExpr& expr, const GRule& rule);

std::string to_string(const SymFactor& f);
std::string to_string(const Word& w);
std::string to_string(const SymExpr& expr);

}  // namespace qinv

#endif  // QINV_QOPERATOR_HPP
