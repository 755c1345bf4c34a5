#include "qinv/invseq.hpp"

#include <algorithm>
#include <stdexcept>

#include "qinv/qcalc.hpp"

namespace qinv {

bool is_inversion_sequence(std::span<const int> e) {
  if (e.empty()) return false;
  for (std::size_t i = 0; i < e.size(); ++i) {
    if (e[i] < 0 || e[i] > static_cast<int>(i)) return false;
  }
  return true;
}

InvSeq::InvSeq(std::vector<int> entries) : entries_(std::move(entries)) {
  if (!is_inversion_sequence(entries_)) {
    throw std::invalid_argument("not an inversion sequence");
  }
}

InvSeq InvSeq::parse(std::string_view text) {
  std::vector<int> v;
  if (text.find(',') != std::string_view::npos) {
    std::size_t pos = 0;
    while (pos <= text.size()) {
      std::size_t end = text.find(',', pos);
      if (end == std::string_view::npos) end = text.size();
      std::string item(text.substr(pos, end - pos));
      if (item.empty()) throw std::invalid_argument("empty entry in inversion sequence");
      std::size_t used = 0;
      v.push_back(std::stoi(item, &used));
      if (used != item.size()) throw std::invalid_argument("bad entry '" + item + "'");
      pos = end + 1;
    }
  } else {
    for (char ch : text) {
      if (ch < '0' || ch > '9') throw std::invalid_argument("bad digit in inversion sequence");
      v.push_back(ch - '0');
    }
  }
  return InvSeq(std::move(v));
}

std::string InvSeq::to_string() const {
  std::string s;
  const bool compact = entries_.size() <= 10;
  for (std::size_t i = 0; i < entries_.size(); ++i) {
    if (!compact && i > 0) s += ',';
    s += std::to_string(entries_[i]);
  }
  return s;
}

int inversions(std::span<const int> word) {
  int inv = 0;
  for (std::size_t i = 0; i < word.size(); ++i) {
    for (std::size_t j = i + 1; j < word.size(); ++j) {
      if (word[i] > word[j]) ++inv;
    }
  }
  return inv;
}

StatVector stats(std::span<const int> e) {
  const int n = static_cast<int>(e.size());
  StatVector s;
  s.inv = inversions(e);
  std::vector<bool> seen(e.size(), false);
  for (int v : e) {
    s.sum += v;
    if (v == 0) ++s.noz;
    if (!seen[static_cast<std::size_t>(v)]) {
      seen[static_cast<std::size_t>(v)] = true;
      ++s.dist;
    }
    s.maxent = std::max(s.maxent, v);
  }
  s.tel = n - s.dist;
  s.uel = n - s.maxent - 1;
  return s;
}

StatVector stats(const InvSeq& e) { return stats(e.entries()); }

FreqVec::FreqVec(std::vector<int> counts) : counts_(std::move(counts)) {
  const int n = static_cast<int>(counts_.size());
  if (n < 1) throw std::invalid_argument("FreqVec: empty");
  int total = 0;
  for (int j = 0; j < n; ++j) {
    const int c = counts_[static_cast<std::size_t>(j)];
    if (c < 0) throw std::invalid_argument("FreqVec: negative count");
    if (c > n - j) throw std::invalid_argument("FreqVec: |e|_j exceeds n - j");
    total += c;
  }
  if (total != n) throw std::invalid_argument("FreqVec: counts do not sum to n");
}

FreqVec freq(std::span<const int> e) {
  std::vector<int> counts(e.size(), 0);
  for (int v : e) ++counts[static_cast<std::size_t>(v)];
  return FreqVec(std::move(counts));
}

FreqVec freq(const InvSeq& e) { return freq(e.entries()); }

std::vector<FreqVec> all_freq_vectors(int n) {
  if (n < 1) throw std::invalid_argument("all_freq_vectors: n must be positive");
  std::vector<FreqVec> out;
  std::vector<int> counts(static_cast<std::size_t>(n), 0);
  auto rec = [&](auto&& self, int j, int remaining) -> void {
    if (j == n - 1) {
      if (remaining <= 1) {
        counts[static_cast<std::size_t>(j)] = remaining;
        out.emplace_back(counts);
      }
      return;
    }
    for (int c = 0; c <= std::min(remaining, n - j); ++c) {
      counts[static_cast<std::size_t>(j)] = c;
      self(self, j + 1, remaining - c);
    }
  };
  rec(rec, 0, n);
  return out;
}

InvSeqStream::InvSeqStream(int n, std::optional<int> last, bool allow_large)
    : n_(n), free_(last ? n - 1 : n), digits_(static_cast<std::size_t>(std::max(n, 0)), 0) {
  if (n < 1) throw std::invalid_argument("enumerate: n must be positive");
  if (n > kDefaultEnumerationBound && !allow_large) {
    throw std::invalid_argument("enumerate: n exceeds the enumeration bound");
  }
  if (last) {
    if (*last < 0 || *last > n - 1) throw std::invalid_argument("enumerate: fixed last entry out of range");
    digits_.back() = *last;
  }
}

bool InvSeqStream::next() {
  if (done_) return false;
  if (!started_) {
    started_ = true;
    return true;
  }
  for (int i = free_ - 1; i >= 1; --i) {
    auto& d = digits_[static_cast<std::size_t>(i)];
    if (d < i) {
      ++d;
      return true;
    }
    d = 0;
  }
  done_ = true;
  return false;
}

std::vector<InvSeq> enumerate(int n) {
  std::vector<InvSeq> out;
  InvSeqStream s(n);
  while (s.next()) out.push_back(s.value());
  return out;
}

MultiPoly brute_F(int n) {
  if (n < 1 || n > 10) throw std::invalid_argument("brute_F: n must lie in [1, 10]");
  std::map<Exponents, long> counts;
  for_each_invseq(n, [&](std::span<const int> e) {
    const StatVector s = stats(e);
    ++counts[Exponents{s.noz, s.tel, s.uel, s.sum, s.inv}];
  });
  MultiPoly r;
  for (const auto& [e, c] : counts) r.add_term(e, Integer(c));
  return r;
}

QLaurent fixed_freq_poly(const FreqVec& v) {
  const int n = v.n();
  QLaurent r(1L);
  int placed_above = 0;  // sum_{s > j} |e|_s
  for (int j = n - 1; j >= 0; --j) {
    const int slots = n - j - placed_above;
    // A zero factor always precedes any negative slot count.
    if (slots < v[j]) return {};
    r *= q_binomial(slots, v[j]);
    placed_above += v[j];
  }
  return r;
}

QLaurent brute_fixed_freq(const FreqVec& v) {
  const int n = v.n();
  if (n > 9) throw std::invalid_argument("brute_fixed_freq: n must be at most 9");
  QLaurent r;
  std::vector<int> counts(static_cast<std::size_t>(n));
  for_each_invseq(n, [&](std::span<const int> e) {
    std::fill(counts.begin(), counts.end(), 0);
    for (int x : e) ++counts[static_cast<std::size_t>(x)];
    if (std::equal(counts.begin(), counts.end(), v.counts().begin())) r.add_term(inversions(e), 1);
  });
  return r;
}

std::map<FreqVec, QLaurent> brute_fixed_freq_table(int n) {
  if (n < 1 || n > 9) throw std::invalid_argument("brute_fixed_freq_table: n must lie in [1, 9]");
  std::map<FreqVec, QLaurent> table;
  for_each_invseq(n, [&](std::span<const int> e) { table[freq(e)].add_term(inversions(e), 1); });
  return table;
}

}  // namespace qinv
