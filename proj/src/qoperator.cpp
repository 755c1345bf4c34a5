#include "qinv/qoperator.hpp"

#include <stdexcept>

#include "qinv/invseq.hpp"
#include "qinv/qcalc.hpp"

namespace qinv {

SymExpr SymExpr::single(Word w, const QLaurent& c) {
  SymExpr e;
  e.add_term(w, c);
  return e;
}

QLaurent SymExpr::coeff(const Word& w) const {
  auto it = terms_.find(w);
  return it == terms_.end() ? QLaurent() : it->second;
}

void SymExpr::add_term(const Word& w, const QLaurent& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(w, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

SymExpr& SymExpr::operator+=(const SymExpr& o) {
  for (const auto& [w, c] : o.terms_) add_term(w, c);
  return *this;
}

SymExpr d_q(const Word& w, const QLaurent& c) {
  SymExpr out;
  for (std::size_t i = 0; i < w.size(); ++i) {
    Word next = w;
    next[i].deriv += 1;
    for (std::size_t j = i + 1; j < next.size(); ++j) next[j].shift += 1;
    out.add_term(next, shift_q(c, w[i].shift));
  }
  return out;
}

SymExpr d_q(const SymExpr& expr) {
  SymExpr out;
  for (const auto& [w, c] : expr) out += d_q(w, c);
  return out;
}

SymExpr times_g(const SymExpr& expr, const QLaurent& c) {
  SymExpr out;
  for (const auto& [w, a] : expr) {
    Word next;
    next.reserve(w.size() + 1);
    next.push_back(SymFactor::g(0));
    next.insert(next.end(), w.begin(), w.end());
    out.add_term(next, a * c);
  }
  return out;
}

SymExpr apply_gdq(const SymExpr& expr) {
  for (const auto& [w, c] : expr) {
    if (w.empty() || w.back().kind != SymFactor::Kind::F) {
      throw std::invalid_argument("apply_gdq: word without terminal f factor");
    }
    for (std::size_t i = 0; i + 1 < w.size(); ++i) {
      if (w[i].kind == SymFactor::Kind::F) throw std::invalid_argument("apply_gdq: f factor not terminal");
    }
  }
  return times_g(d_q(expr));
}

SymExpr gdq_power(int n) {
  if (n < 0) throw std::invalid_argument("gdq_power: n must be nonnegative");
  SymExpr e = SymExpr::single({SymFactor::f(0)});
  for (int i = 0; i < n; ++i) e = apply_gdq(e);
  return e;
}

SymExpr expand_via_invseq(int n) {
  if (n < 1 || n > 9) throw std::invalid_argument("expand_via_invseq: n must lie in [1, 9]");
  SymExpr out;
  std::vector<int> counts(static_cast<std::size_t>(n));
  Word w(static_cast<std::size_t>(n) + 1);
  for_each_invseq(n, [&](std::span<const int> e) {
    std::fill(counts.begin(), counts.end(), 0);
    for (int v : e) ++counts[static_cast<std::size_t>(v)];
    w[0] = SymFactor::g(0);
    int prefix = 0;  // K_{j-1}
    for (int j = 1; j < n; ++j) {
      const int kj = counts[static_cast<std::size_t>(n - j)];
      w[static_cast<std::size_t>(j)] = SymFactor::g(kj, prefix);
      prefix += kj;
    }
    w[static_cast<std::size_t>(n)] = SymFactor::f(counts[0], prefix);
    out.add_term(w, q_monomial(inversions(e)));
  });
  return out;
}

SymExpr lnk_from_expansion(const SymExpr& expr, int n, int k) {
  const SymFactor target = SymFactor::f(k, n - k);
  SymExpr out;
  for (const auto& [w, c] : expr) {
    if (w.empty() || w.back() != target) continue;
    out.add_term(Word(w.begin(), w.end() - 1), c);
  }
  return out;
}

SymExpr lnk_explicit(int n, int k) {
  if (n < 1 || k < 1 || k > n) throw std::invalid_argument("lnk_explicit: need 1 <= k <= n");
  SymExpr out;
  Word w(static_cast<std::size_t>(n));
  w[0] = SymFactor::g(0);
  // comp[j] = k_j for j = 1..n-1; K_j <= j prunes the search.
  std::vector<int> comp(static_cast<std::size_t>(n), 0);
  auto rec = [&](auto&& self, int j, int prefix) -> void {
    if (j == n) {
      if (prefix != n - k) return;
      QLaurent c(1L);
      int before = 0;  // K_{j-1}
      for (int i = 1; i <= n; ++i) {
        const int ki = i < n ? comp[static_cast<std::size_t>(i)] : k;
        c *= q_binomial(i - before, ki);
        before += ki;
      }
      out.add_term(w, c);
      return;
    }
    for (int kj = 0; prefix + kj <= j && prefix + kj <= n - k; ++kj) {
      comp[static_cast<std::size_t>(j)] = kj;
      w[static_cast<std::size_t>(j)] = SymFactor::g(kj, prefix);
      self(self, j + 1, prefix + kj);
    }
  };
  rec(rec, 1, 0);
  return out;
}

SymExpr lnk_recurrence(int n, int k) {
  if (n < 0) throw std::invalid_argument("lnk_recurrence: n must be nonnegative");
  if (k < 0 || k > n) return {};
  // table[m][j] = L_{m,j}
  std::vector<std::vector<SymExpr>> table(1, std::vector<SymExpr>{SymExpr::single({})});
  for (int m = 0; m < n; ++m) {
    std::vector<SymExpr> row(static_cast<std::size_t>(m) + 2);
    const auto& prev = table.back();
    for (int j = 1; j <= m + 1; ++j) {
      SymExpr value;
      if (j <= m) value += times_g(d_q(prev[static_cast<std::size_t>(j)]));
      value += times_g(prev[static_cast<std::size_t>(j - 1)], q_monomial(m - j + 1));
      row[static_cast<std::size_t>(j)] = std::move(value);
    }
    table.push_back(std::move(row));
  }
  return table[static_cast<std::size_t>(n)][static_cast<std::size_t>(k)];
}

GRule g_is_x() {
  return [](int deriv, int shift) -> MultiPoly {
    if (deriv == 0) return var(Var::q, shift) * var(Var::x);
    if (deriv == 1) return MultiPoly(1L);
    return MultiPoly();
  };
}

MultiPoly specialize_g(const SymExpr& expr, const GRule& rule) {
  MultiPoly out;
  for (const auto& [w, c] : expr) {
    MultiPoly term = from_qlaurent(c);
    for (const SymFactor& f : w) {
      if (f.kind == SymFactor::Kind::F) throw std::invalid_argument("specialize_g: unstripped f factor");
      term *= rule(f.deriv, f.shift);
      if (term.is_zero()) break;
    }
    out += term;
  }
  return out;
}

std::string to_string(const SymFactor& f) {
  std::string s = f.kind == SymFactor::Kind::G ? "g" : "f";
  if (f.kind == SymFactor::Kind::F || f.deriv != 0 || f.shift != 0) s += "_" + std::to_string(f.deriv);
  if (f.shift != 0) s += "^(" + std::to_string(f.shift) + ")";
  return s;
}

std::string to_string(const Word& w) {
  if (w.empty()) return "1";
  std::string s;
  for (const SymFactor& f : w) {
    if (!s.empty()) s += ' ';
    s += to_string(f);
  }
  return s;
}

std::string to_string(const SymExpr& expr) {
  if (expr.is_zero()) return "0";
  std::string s;
  for (const auto& [w, c] : expr) {
    if (!s.empty()) s += " + ";
    if (c != QLaurent(1L)) s += "(" + to_string(c) + ") ";
    s += to_string(w);
  }
  return s;
}

}  // namespace qinv
