#ifndef QINV_POLY_HPP
#define QINV_POLY_HPP

#include <array>
#include <cstddef>
#include <map>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include <gmpxx.h>

namespace qinv {

using Integer = mpz_class;

/// The five variables of the generating polynomial, in storage order.
enum class Var : int { x = 0, y = 1, z = 2, p = 3, q = 4 };

inline constexpr std::array<std::string_view, 5> kVarNames{"x", "y", "z", "p", "q"};

/// Exponent vector (ex, ey, ez, ep, eq).
using Exponents = std::array<int, 5>;

namespace detail {

inline Exponents combine(const Exponents& a, const Exponents& b) {
  Exponents r{};
  for (std::size_t i = 0; i < r.size(); ++i) r[i] = a[i] + b[i];
  return r;
}

inline int combine(int a, int b) { return a + b; }

}  // namespace detail

/**
 * Sparse polynomial with arbitrary-precision integer coefficients.
 *
 * `Key` is the monomial type: an exponent vector for the five-variable ring
 * or a single (possibly negative) exponent for Laurent polynomials in q.
 * The term map never stores a zero coefficient, so structural equality of
 * the maps is polynomial equality.
 */
template <typename Key>
class SparsePoly {
 public:
  using key_type = Key;
  using term_map = std::map<Key, Integer>;

  SparsePoly() = default;
  SparsePoly(long c) { add_term(Key{}, Integer(c)); }  // NOLINT: constants convert implicitly
  explicit SparsePoly(const Integer& c) { add_term(Key{}, c); }

  static SparsePoly monomial(const Key& k, const Integer& c = 1) {
    SparsePoly r;
    r.add_term(k, c);
    return r;
  }

  const term_map& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }
  auto begin() const { return terms_.begin(); }
  auto end() const { return terms_.end(); }

  Integer coeff(const Key& k) const {
    auto it = terms_.find(k);
    return it == terms_.end() ? Integer(0) : it->second;
  }

  void add_term(const Key& k, const Integer& c) {
    if (c == 0) return;
    auto [it, inserted] = terms_.try_emplace(k, c);
    if (!inserted) {
      it->second += c;
      if (it->second == 0) terms_.erase(it);
    }
  }

  SparsePoly& operator+=(const SparsePoly& o) {
    for (const auto& [k, c] : o.terms_) add_term(k, c);
    return *this;
  }

  SparsePoly& operator-=(const SparsePoly& o) {
    for (const auto& [k, c] : o.terms_) add_term(k, -c);
    return *this;
  }

  SparsePoly& operator*=(const SparsePoly& o) {
    *this = *this * o;
    return *this;
  }

  SparsePoly& operator*=(const Integer& s) {
    if (s == 0) {
      terms_.clear();
    } else {
      for (auto& [k, c] : terms_) c *= s;
    }
    return *this;
  }

  friend SparsePoly operator+(SparsePoly a, const SparsePoly& b) { return a += b; }
  friend SparsePoly operator-(SparsePoly a, const SparsePoly& b) { return a -= b; }
  friend SparsePoly operator-(SparsePoly a) {
    for (auto& [k, c] : a.terms_) c = -c;
    return a;
  }

  friend SparsePoly operator*(const SparsePoly& a, const SparsePoly& b) {
    SparsePoly r;
    for (const auto& [ka, ca] : a.terms_) {
      for (const auto& [kb, cb] : b.terms_) {
        r.add_term(detail::combine(ka, kb), ca * cb);
      }
    }
    return r;
  }

  friend SparsePoly operator*(SparsePoly a, const Integer& s) { return a *= s; }
  friend SparsePoly operator*(const Integer& s, SparsePoly a) { return a *= s; }

  friend bool operator==(const SparsePoly& a, const SparsePoly& b) {
    if (a.terms_.size() != b.terms_.size()) return false;
    auto ib = b.terms_.begin();
    for (const auto& [k, c] : a.terms_) {
      if (k != ib->first || c != ib->second) return false;
      ++ib;
    }
    return true;
  }

 private:
  term_map terms_;
};

template <typename Key>
SparsePoly<Key> pow(SparsePoly<Key> base, unsigned e) {
  SparsePoly<Key> r(1L);
  while (e > 0) {
    if (e & 1U) r *= base;
    e >>= 1U;
    if (e > 0) base *= base;
  }
  return r;
}

using MultiPoly = SparsePoly<Exponents>;
using QLaurent = SparsePoly<int>;

// ---------------------------------------------------------------------------
// MultiPoly

MultiPoly monomial(const Exponents& e, const Integer& c = 1);
MultiPoly var(Var v, int power = 1);

/// Parses "x", "y", "z", "p", "q"; throws std::invalid_argument otherwise.
Var parse_var(std::string_view name);

int degree_in(const MultiPoly& a, Var v);

/// Substitutes integer values for a subset of the variables. Unknown names throw.
MultiPoly eval_partial(const MultiPoly& a, const std::map<std::string, long>& bindings);
MultiPoly eval_partial(const MultiPoly& a, const std::map<Var, long>& bindings);

/// The constant term after full evaluation; throws if variables remain.
Integer constant_value(const MultiPoly& a);

/**
 * f(x) -> p^n * x * f(x/p), termwise
 * x^a y^b z^c p^d q^e -> x^(a+1) y^b z^c p^(d+n-a) q^e.
 *
 * Throws std::domain_error if any p-exponent would become negative.
 */
MultiPoly scaled_shift(const MultiPoly& a, int n);

/// Drops every term of x-degree greater than `max_degree`.
MultiPoly truncate_x(const MultiPoly& a, int max_degree);

/// Reads a polynomial that involves only `v` as a QLaurent in that variable.
QLaurent to_qlaurent(const MultiPoly& a, Var v = Var::q);

/// Embeds a QLaurent as a polynomial in `v`; negative exponents throw.
MultiPoly from_qlaurent(const QLaurent& a, Var v = Var::q);

/// "x^2*y*z + x*p", terms by descending total degree then exponent vector.
std::string to_string(const MultiPoly& a);

// ---------------------------------------------------------------------------
// QLaurent

QLaurent q_monomial(int e, const Integer& c = 1);

int min_degree(const QLaurent& a);
int max_degree(const QLaurent& a);

/// True when no exponent is negative.
bool is_polynomial(const QLaurent& a);

/// q -> 1/q.
QLaurent invert_q(const QLaurent& a);

/// Multiplication by q^m.
QLaurent shift_q(const QLaurent& a, int m);

Integer evaluate(const QLaurent& a, long q);

/// Coefficient list c_0..c_d of a polynomial in q; throws on negative exponents.
std::vector<Integer> coefficients(const QLaurent& a);

std::string to_string(const QLaurent& a);

}  // namespace qinv

#endif  // QINV_POLY_HPP
