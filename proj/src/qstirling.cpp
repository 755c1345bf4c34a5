#include "qinv/qstirling.hpp"

#include <functional>
#include <mutex>
#include <stdexcept>

#include "qinv/qcalc.hpp"

namespace qinv {

namespace {

// Triangle memo keyed by (n, k); rows are built in order of n.
class StirlingTable {
 public:
  using Step = std::function<QLaurent(const StirlingTable&, int, int)>;

  StirlingTable(std::vector<std::vector<QLaurent>> seed, Step step)
      : rows_(std::move(seed)), step_(std::move(step)) {}

  QLaurent get(int n, int k) {
    if (n < 0) throw std::invalid_argument("q-Stirling: n must be nonnegative");
    if (k < 0 || k > n) return {};
    std::lock_guard<std::mutex> lock(mu_);
    while (static_cast<int>(rows_.size()) <= n) {
      const int m = static_cast<int>(rows_.size());
      std::vector<QLaurent> row(static_cast<std::size_t>(m) + 1);
      for (int j = 0; j <= m; ++j) row[static_cast<std::size_t>(j)] = step_(*this, m, j);
      rows_.push_back(std::move(row));
    }
    return rows_[static_cast<std::size_t>(n)][static_cast<std::size_t>(k)];
  }

  // Unsynchronised read used by the step function while the lock is held.
  const QLaurent& at(int n, int k) const {
    static const QLaurent zero;
    if (k < 0 || k > n) return zero;
    return rows_[static_cast<std::size_t>(n)][static_cast<std::size_t>(k)];
  }

 private:
  std::mutex mu_;
  std::vector<std::vector<QLaurent>> rows_;
  Step step_;
};

}  // namespace

QLaurent s_q(int n, int k) {
  static StirlingTable table({{QLaurent(1L)}}, [](const StirlingTable& t, int m, int j) {
    return shift_q(t.at(m - 1, j - 1), m - j) + q_int(j) * t.at(m - 1, j);
  });
  return table.get(n, k);
}

QLaurent s_milne(int n, int k) {
  static StirlingTable table({{QLaurent()}, {QLaurent(), QLaurent(1L)}},
                             [](const StirlingTable& t, int m, int j) {
                               if (j == 0) return QLaurent();
                               return q_int(j) * t.at(m - 1, j) + shift_q(t.at(m - 1, j - 1), j - 1);
                             });
  return table.get(n, k);
}

QLaurent s_star(int n, int k) {
  static StirlingTable table({{QLaurent(1L)}}, [](const StirlingTable& t, int m, int j) {
    return q_int(j) * t.at(m - 1, j) + t.at(m - 1, j - 1);
  });
  return table.get(n, k);
}

Integer stirling2(int n, int k) {
  if (n < 0) throw std::invalid_argument("stirling2: n must be nonnegative");
  std::vector<Integer> row{1};
  for (int m = 1; m <= n; ++m) {
    std::vector<Integer> next(static_cast<std::size_t>(m) + 1, 0);
    for (int j = 1; j <= m; ++j) {
      Integer keep = j < m ? row[static_cast<std::size_t>(j)] : Integer(0);
      next[static_cast<std::size_t>(j)] = row[static_cast<std::size_t>(j - 1)] + j * keep;
    }
    row = std::move(next);
  }
  return k < 0 || k > n ? Integer(0) : row[static_cast<std::size_t>(k)];
}

bool has_distinct_nonzero(std::span<const int> e) {
  std::vector<bool> seen(e.size(), false);
  for (int v : e) {
    if (v == 0) continue;
    if (seen[static_cast<std::size_t>(v)]) return false;
    seen[static_cast<std::size_t>(v)] = true;
  }
  return true;
}

AugSeq::AugSeq(InvSeq base) : base_(std::move(base)) {
  if (!has_distinct_nonzero(base_.entries())) {
    throw std::invalid_argument("AugSeq: nonzero entries must be pairwise distinct");
  }
  const int n = base_.size();
  std::vector<bool> used(static_cast<std::size_t>(n), false);
  for (int v : base_.entries()) used[static_cast<std::size_t>(v)] = true;
  for (int v = 1; v < n; ++v) {
    if (!used[static_cast<std::size_t>(v)]) excluded_.push_back(v);
  }
}

std::string AugSeq::to_string() const {
  std::string s = base_.to_string() + ".";
  const bool compact = base_.size() <= 10;
  for (std::size_t i = 0; i < excluded_.size(); ++i) {
    if (!compact && i > 0) s += ',';
    s += std::to_string(excluded_[i]);
  }
  return s;
}

int inv_aug(const AugSeq& a) {
  std::vector<int> word(a.base().entries().begin(), a.base().entries().end());
  word.insert(word.end(), a.excluded().begin(), a.excluded().end());
  return inversions(word);
}

QLaurent s_q_via_invseq(int n, int k) {
  if (n < 1 || n > 9) throw std::invalid_argument("s_q_via_invseq: n must lie in [1, 9]");
  QLaurent r;
  if (k < 1 || k > n) return r;
  for_each_invseq(n, [&](std::span<const int> e) {
    int zeros = 0;
    for (int v : e) zeros += v == 0;
    if (zeros != k || !has_distinct_nonzero(e)) return;
    r.add_term(inv_aug(AugSeq(InvSeq(std::vector<int>(e.begin(), e.end())))), 1);
  });
  return r;
}

}  // namespace qinv
