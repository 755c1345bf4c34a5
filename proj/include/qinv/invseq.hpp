#ifndef QINV_INVSEQ_HPP
#define QINV_INVSEQ_HPP

#include <compare>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "qinv/poly.hpp"

namespace qinv {

/// Largest length `InvSeqStream` accepts unless the caller opts out.
inline constexpr int kDefaultEnumerationBound = 12;

/// An inversion sequence (e_0, ..., e_{n-1}) with 0 <= e_i <= i.
class InvSeq {
 public:
  /// Throws std::invalid_argument unless the entries form an inversion sequence.
  explicit InvSeq(std::vector<int> entries);

  /// Accepts "0012" (one digit per entry) or "0,0,1,2".
  static InvSeq parse(std::string_view text);

  int size() const { return static_cast<int>(entries_.size()); }
  int operator[](int i) const { return entries_[static_cast<std::size_t>(i)]; }
  std::span<const int> entries() const { return entries_; }

  /// Digits run together for n <= 10, comma-separated beyond.
  std::string to_string() const;

  friend auto operator<=>(const InvSeq&, const InvSeq&) = default;

 private:
  std::vector<int> entries_;
};

bool is_inversion_sequence(std::span<const int> e);

struct StatVector {
  int inv = 0;
  int sum = 0;
  int noz = 0;
  int dist = 0;
  int tel = 0;
  int uel = 0;
  int maxent = 0;

  friend bool operator==(const StatVector&, const StatVector&) = default;
};

StatVector stats(const InvSeq& e);
StatVector stats(std::span<const int> e);

int inversions(std::span<const int> word);

/// Occurrence counts (|e|_0, ..., |e|_{n-1}).
class FreqVec {
 public:
  /// Requires n >= 1 entries, all nonnegative, summing to n, with |e|_j <= n - j.
  explicit FreqVec(std::vector<int> counts);

  int n() const { return static_cast<int>(counts_.size()); }
  int operator[](int j) const { return counts_[static_cast<std::size_t>(j)]; }
  std::span<const int> counts() const { return counts_; }

  friend auto operator<=>(const FreqVec&, const FreqVec&) = default;

 private:
  std::vector<int> counts_;
};

FreqVec freq(const InvSeq& e);
FreqVec freq(std::span<const int> e);

/// Every FreqVec of length n, in lexicographic order of counts.
std::vector<FreqVec> all_freq_vectors(int n);

/**
 * Odometer over I_n in lexicographic order.
 *
 * A stream may fix the last entry, which splits I_n into n disjoint
 * sub-streams that can be folded independently.
 *
 *     InvSeqStream s(5);
 *     while (s.next()) use(s.current());
 */
class InvSeqStream {
 public:
  explicit InvSeqStream(int n, std::optional<int> last = std::nullopt, bool allow_large = false);

  /// Advances to the next sequence; false once exhausted.
  bool next();

  std::span<const int> current() const { return digits_; }
  InvSeq value() const { return InvSeq(digits_); }

 private:
  int n_;
  bool started_ = false;
  bool done_ = false;
  int free_;  // number of leading positions that vary
  std::vector<int> digits_;
};

template <typename Fn>
void for_each_invseq(int n, Fn&& fn) {
  InvSeqStream s(n);
  while (s.next()) fn(s.current());
}

/// Materialises I_n; intended for small n.
std::vector<InvSeq> enumerate(int n);

/// sum_e x^noz y^tel z^uel p^sum q^inv by direct enumeration, 1 <= n <= 10.
MultiPoly brute_F(int n);

/// Product of q-binomials counting inversions over sequences with frequency v.
QLaurent fixed_freq_poly(const FreqVec& v);

/// Sum of q^inv over e in I_n with freq(e) == v, by filtering; n <= 9.
QLaurent brute_fixed_freq(const FreqVec& v);

/// One pass over I_n grouping q^inv by frequency vector; n <= 9.
std::map<FreqVec, QLaurent> brute_fixed_freq_table(int n);

}  // namespace qinv

#endif  // QINV_INVSEQ_HPP
