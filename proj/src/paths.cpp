#include "qinv/paths.hpp"

#include <algorithm>
#include <stdexcept>
#include <utility>

#include "qinv/recurrence.hpp"

namespace qinv {

namespace {

Integer binomial(int n, int k) {
  if (k < 0 || k > n) return 0;
  Integer r;
  mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
  return r;
}

}  // namespace

LatticePath::LatticePath(std::string steps) : steps_(std::move(steps)) {
  int east = 0, north = 0;
  for (char c : steps_) {
    if (c == 'E') {
      ++east;
    } else if (c == 'N') {
      ++north;
      if (north > east) throw std::invalid_argument("lattice path rises above the diagonal");
    } else {
      throw std::invalid_argument("lattice path steps must be E or N");
    }
  }
  if (east != north || east == 0) throw std::invalid_argument("lattice path must end at (n,n) with n >= 1");
}

std::string LatticePath::dyck_word() const {
  std::string w = steps_;
  std::replace(w.begin(), w.end(), 'E', 'U');
  std::replace(w.begin(), w.end(), 'N', 'D');
  return w;
}

bool is_weakly_increasing(const InvSeq& e) {
  auto v = e.entries();
  return std::is_sorted(v.begin(), v.end());
}

LatticePath phi(const InvSeq& e) {
  if (!is_weakly_increasing(e)) throw std::invalid_argument("not in WI_n");
  const int n = e.size();
  std::string w;
  w.reserve(static_cast<std::size_t>(2 * n));
  for (int i = 0; i < n; ++i) {
    w += 'E';
    const int next = i + 1 < n ? e[i + 1] : n;
    w.append(static_cast<std::size_t>(next - e[i]), 'N');
  }
  return LatticePath(std::move(w));
}

InvSeq phi_inv(const LatticePath& path) {
  std::vector<int> e;
  int height = 0;
  for (char c : path.steps()) {
    if (c == 'E') {
      e.push_back(height);
    } else {
      ++height;
    }
  }
  return InvSeq(std::move(e));
}

DyckStats dyck_stats(const LatticePath& path) {
  const std::string& w = path.steps();
  DyckStats s;
  int h = 0;
  bool seen_peak = false;
  for (std::size_t i = 0; i < w.size(); ++i) {
    const bool up = w[i] == 'E';
    h += up ? 1 : -1;
    if (!up && h == 0) ++s.returns;
    if (i + 1 < w.size()) {
      const bool next_up = w[i + 1] == 'E';
      if (up && !next_up) {
        ++s.peaks;
        if (!seen_peak) s.first_peak_height = h;
        seen_peak = true;
        s.last_peak_height = h;
      } else if (!up && next_up) {
        ++s.valleys;
      }
    }
  }
  return s;
}

LatticePath reverse_swap(const LatticePath& path) {
  std::string w(path.steps().rbegin(), path.steps().rend());
  for (char& c : w) c = c == 'E' ? 'N' : 'E';
  return LatticePath(std::move(w));
}

std::vector<LatticePath> all_paths(int n) {
  if (n < 1) throw std::invalid_argument("all_paths: n must be positive");
  std::vector<LatticePath> out;
  std::string w;
  auto rec = [&](auto&& self, int east, int north) -> void {
    if (east == n && north == n) {
      out.emplace_back(w);
      return;
    }
    if (east < n) {
      w.push_back('E');
      self(self, east + 1, north);
      w.pop_back();
    }
    if (north < east) {
      w.push_back('N');
      self(self, east, north + 1);
      w.pop_back();
    }
  };
  rec(rec, 0, 0);
  return out;
}

std::vector<InvSeq> weakly_increasing(int n) {
  if (n < 1) throw std::invalid_argument("weakly_increasing: n must be positive");
  std::vector<InvSeq> out;
  std::vector<int> e(static_cast<std::size_t>(n), 0);
  auto rec = [&](auto&& self, int i) -> void {
    if (i == n) {
      out.emplace_back(e);
      return;
    }
    for (int v = e[static_cast<std::size_t>(i - 1)]; v <= i; ++v) {
      e[static_cast<std::size_t>(i)] = v;
      self(self, i + 1);
    }
  };
  rec(rec, 1);
  return out;
}

InvSeq tau(const InvSeq& e) {
  std::vector<int> v(e.entries().begin(), e.entries().end());
  int i = e.size() - 1;
  while (i >= 1) {
    auto& cur = v[static_cast<std::size_t>(i)];
    auto& prev = v[static_cast<std::size_t>(i - 1)];
    if (cur == i) {
      i -= 1;
    } else if (cur == prev) {
      i -= 2;
    } else {
      // e_0 = 0 forces case A or B1 at i = 1.
      if (i < 2) throw std::logic_error("tau: swap would touch position 0");
      std::swap(prev, cur);
      break;
    }
  }
  return InvSeq(std::move(v));
}

Integer involution_count(int n) {
  if (n < 1) throw std::invalid_argument("involution_count: n must be positive");
  Integer a = 1, b = 1;  // a(0), a(1)
  for (int m = 2; m <= n; ++m) {
    Integer c = b + (m - 1) * a;
    a = b;
    b = c;
  }
  return b;
}

Integer catalan(int n) {
  if (n < 0) throw std::invalid_argument("catalan: n must be nonnegative");
  return binomial(2 * n, n) / (n + 1);
}

Integer narayana(int n, int k) {
  if (n < 1) throw std::invalid_argument("narayana: n must be positive");
  return binomial(n, k + 1) * binomial(n, k) / n;
}

std::vector<std::vector<Integer>> returns_triangle(int n_max) {
  if (n_max < 1) throw std::invalid_argument("returns_triangle: n must be positive");
  // Column n_max + 1 stays zero and terminates the k + 1 lookups.
  std::vector<std::vector<Integer>> t(static_cast<std::size_t>(n_max) + 1,
                                      std::vector<Integer>(static_cast<std::size_t>(n_max) + 2, 0));
  t[1][1] = 1;
  for (int n = 2; n <= n_max; ++n) {
    for (int k = n; k >= 1; --k) {
      t[n][k] = t[n - 1][k - 1] + t[n][k + 1];
    }
  }
  for (auto& row : t) row.pop_back();
  return t;
}

std::vector<Integer> first_last_peak_row(int n) {
  const MultiPoly at_q0 =
      eval_partial(F(n), std::map<Var, long>{{Var::y, 1}, {Var::p, 1}, {Var::q, 0}});
  std::vector<Integer> row(static_cast<std::size_t>(2 * n) + 1, 0);
  for (const auto& [e, c] : at_q0) row.at(static_cast<std::size_t>(e[0] + e[2] + 1)) += c;
  return row;
}

}  // namespace qinv
