#include "qinv/poly.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <stdexcept>
#include <vector>

namespace qinv {

namespace {

Integer int_pow(long base, unsigned e) {
  Integer r;
  mpz_pow_ui(r.get_mpz_t(), Integer(base).get_mpz_t(), e);
  return r;
}

int total_degree(const Exponents& e) { return std::accumulate(e.begin(), e.end(), 0); }

// Writes " + c" / " - c" (or a leading "-c") for one term; `body` is the
// monomial text without coefficient, empty for the constant term.
void write_term(std::ostringstream& os, bool first, const Integer& c, const std::string& body) {
  Integer mag = abs(c);
  if (first) {
    if (c < 0) os << '-';
  } else {
    os << (c < 0 ? " - " : " + ");
  }
  if (body.empty()) {
    os << mag.get_str();
  } else {
    if (mag != 1) os << mag.get_str();
    os << body;
  }
}

}  // namespace

MultiPoly monomial(const Exponents& e, const Integer& c) {
  for (int v : e) {
    if (v < 0) throw std::invalid_argument("monomial: negative exponent");
  }
  return MultiPoly::monomial(e, c);
}

MultiPoly var(Var v, int power) {
  Exponents e{};
  e[static_cast<int>(v)] = power;
  return monomial(e);
}

Var parse_var(std::string_view name) {
  for (std::size_t i = 0; i < kVarNames.size(); ++i) {
    if (kVarNames[i] == name) return static_cast<Var>(i);
  }
  throw std::invalid_argument("unknown variable '" + std::string(name) + "'");
}

int degree_in(const MultiPoly& a, Var v) {
  int d = 0;
  for (const auto& [e, c] : a) d = std::max(d, e[static_cast<int>(v)]);
  return d;
}

MultiPoly eval_partial(const MultiPoly& a, const std::map<std::string, long>& bindings) {
  std::map<Var, long> typed;
  for (const auto& [name, value] : bindings) typed[parse_var(name)] = value;
  return eval_partial(a, typed);
}

MultiPoly eval_partial(const MultiPoly& a, const std::map<Var, long>& bindings) {
  if (bindings.empty()) return a;
  MultiPoly r;
  for (const auto& [e, c] : a) {
    Exponents rest = e;
    Integer coeff = c;
    for (const auto& [v, value] : bindings) {
      int idx = static_cast<int>(v);
      coeff *= int_pow(value, static_cast<unsigned>(e[idx]));
      rest[idx] = 0;
    }
    r.add_term(rest, coeff);
  }
  return r;
}

Integer constant_value(const MultiPoly& a) {
  for (const auto& [e, c] : a) {
    if (e != Exponents{}) throw std::invalid_argument("constant_value: polynomial is not constant");
  }
  return a.coeff(Exponents{});
}

MultiPoly scaled_shift(const MultiPoly& a, int n) {
  MultiPoly r;
  for (const auto& [e, c] : a) {
    Exponents s = e;
    s[0] = e[0] + 1;
    s[3] = e[3] + n - e[0];
    if (s[3] < 0) throw std::domain_error("substitution leaves polynomial ring");
    r.add_term(s, c);
  }
  return r;
}

MultiPoly truncate_x(const MultiPoly& a, int max_degree) {
  MultiPoly r;
  for (const auto& [e, c] : a) {
    if (e[0] <= max_degree) r.add_term(e, c);
  }
  return r;
}

QLaurent to_qlaurent(const MultiPoly& a, Var v) {
  const int idx = static_cast<int>(v);
  QLaurent r;
  for (const auto& [e, c] : a) {
    for (int i = 0; i < 5; ++i) {
      if (i != idx && e[i] != 0) {
        throw std::invalid_argument("to_qlaurent: polynomial involves more than one variable");
      }
    }
    r.add_term(e[idx], c);
  }
  return r;
}

MultiPoly from_qlaurent(const QLaurent& a, Var v) {
  MultiPoly r;
  for (const auto& [k, c] : a) {
    if (k < 0) throw std::domain_error("from_qlaurent: negative exponent");
    Exponents e{};
    e[static_cast<int>(v)] = k;
    r.add_term(e, c);
  }
  return r;
}

std::string to_string(const MultiPoly& a) {
  if (a.is_zero()) return "0";
  std::vector<std::pair<Exponents, Integer>> terms(a.begin(), a.end());
  std::sort(terms.begin(), terms.end(), [](const auto& l, const auto& r) {
    int dl = total_degree(l.first), dr = total_degree(r.first);
    if (dl != dr) return dl > dr;
    return l.first > r.first;
  });
  std::ostringstream os;
  bool first = true;
  for (const auto& [e, c] : terms) {
    std::string body;
    for (std::size_t i = 0; i < e.size(); ++i) {
      if (e[i] == 0) continue;
      if (!body.empty()) body += '*';
      body += kVarNames[i];
      if (e[i] > 1) body += "^" + std::to_string(e[i]);
    }
    write_term(os, first, c, body);
    first = false;
  }
  return os.str();
}

QLaurent q_monomial(int e, const Integer& c) { return QLaurent::monomial(e, c); }

int min_degree(const QLaurent& a) {
  if (a.is_zero()) throw std::domain_error("min_degree of zero");
  return a.terms().begin()->first;
}

int max_degree(const QLaurent& a) {
  if (a.is_zero()) throw std::domain_error("max_degree of zero");
  return a.terms().rbegin()->first;
}

bool is_polynomial(const QLaurent& a) { return a.is_zero() || min_degree(a) >= 0; }

QLaurent invert_q(const QLaurent& a) {
  QLaurent r;
  for (const auto& [k, c] : a) r.add_term(-k, c);
  return r;
}

QLaurent shift_q(const QLaurent& a, int m) {
  QLaurent r;
  for (const auto& [k, c] : a) r.add_term(k + m, c);
  return r;
}

Integer evaluate(const QLaurent& a, long q) {
  Integer r = 0;
  for (const auto& [k, c] : a) {
    if (k >= 0) {
      r += c * int_pow(q, static_cast<unsigned>(k));
    } else if (q == 1 || q == -1) {
      r += c * int_pow(q, static_cast<unsigned>(-k));
    } else {
      throw std::domain_error("evaluate: negative exponent at non-unit point");
    }
  }
  return r;
}

std::vector<Integer> coefficients(const QLaurent& a) {
  if (a.is_zero()) return {};
  if (!is_polynomial(a)) throw std::domain_error("coefficients: negative exponent");
  std::vector<Integer> r(static_cast<std::size_t>(max_degree(a)) + 1, 0);
  for (const auto& [k, c] : a) r[static_cast<std::size_t>(k)] = c;
  return r;
}

std::string to_string(const QLaurent& a) {
  if (a.is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (auto it = a.terms().rbegin(); it != a.terms().rend(); ++it) {
    const auto& [k, c] = *it;
    std::string body;
    if (k == 1) {
      body = "q";
    } else if (k != 0) {
      body = "q^" + std::to_string(k);
    }
    write_term(os, first, c, body);
    first = false;
  }
  return os.str();
}

}  // namespace qinv
