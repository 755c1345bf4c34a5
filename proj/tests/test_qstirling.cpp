#include <gtest/gtest.h>

#include <set>

#include "oracles.hpp"
#include "qinv/qstirling.hpp"

using namespace qinv;

namespace {

// sum over sequences with k zeros and distinct nonzero entries of
// q^{inv(e . missing values)}, computed from scratch.
QLaurent inv_sum(int n, int k) {
  QLaurent out;
  oracle::each_invseq(n, [&](const std::vector<int>& e) {
    std::set<int> used;
    int zeros = 0;
    for (int v : e) {
      if (v == 0) {
        ++zeros;
      } else if (!used.insert(v).second) {
        return;
      }
    }
    if (zeros != k) return;
    std::vector<int> word = e;
    for (int v = 1; v < n; ++v)
      if (!used.count(v)) word.push_back(v);
    out.add_term(oracle::inv(word), 1);
  });
  return out;
}

}  // namespace

TEST(QStirling, AugmentedExample) {
  const AugSeq a(InvSeq::parse("01003400"));
  EXPECT_EQ(a.to_string(), "01003400.2567");
  EXPECT_EQ(a.excluded(), (std::vector<int>{2, 5, 6, 7}));
  EXPECT_EQ(a.zeros(), 5);
  EXPECT_EQ(inv_aug(a), oracle::inv({0, 1, 0, 0, 3, 4, 0, 0, 2, 5, 6, 7}));
  EXPECT_THROW(AugSeq(InvSeq::parse("0101")), std::invalid_argument);
}

TEST(QStirling, MatchesInvSumOracle) {
  for (int n = 1; n <= 7; ++n) {
    for (int k = 1; k <= n; ++k) {
      const QLaurent want = inv_sum(n, k);
      EXPECT_EQ(s_q(n, k), want) << n << "," << k;
      EXPECT_EQ(s_q_via_invseq(n, k), want) << n << "," << k;
    }
  }
}

TEST(QStirling, BoundaryValues) {
  EXPECT_EQ(s_q(0, 0), QLaurent(1L));
  EXPECT_EQ(s_star(0, 0), QLaurent(1L));
  EXPECT_EQ(s_milne(0, 0), QLaurent());
  EXPECT_EQ(s_milne(1, 1), QLaurent(1L));
  EXPECT_EQ(s_q(3, 0), QLaurent());
  EXPECT_EQ(s_q(3, 4), QLaurent());
  EXPECT_EQ(s_q(5, 5), QLaurent(1L));
  EXPECT_THROW(s_q(-1, 0), std::invalid_argument);
}

TEST(QStirling, MilneAndLerouxMedicisRelations) {
  for (int n = 1; n <= 9; ++n) {
    for (int j = 1; j <= n; ++j) {
      const int twice = (j - 1) * (2 * n - j);
      ASSERT_EQ(twice % 2, 0);
      EXPECT_EQ(shift_q(invert_q(s_milne(n, j)), twice / 2), s_q(n, j));
      EXPECT_EQ(shift_q(invert_q(s_star(n, j)), (j - 1) * (n - j)), s_q(n, j));
    }
  }
}

TEST(QStirling, CollapseAtQEqualsOne) {
  for (int n = 0; n <= 10; ++n) {
    for (int k = 0; k <= n; ++k) {
      const Integer s = oracle::stirling2(n, k);
      EXPECT_EQ(stirling2(n, k), s);
      EXPECT_EQ(evaluate(s_q(n, k), 1), s);
      EXPECT_EQ(evaluate(s_star(n, k), 1), s);
      if (n >= 1) EXPECT_EQ(evaluate(s_milne(n, k), 1), s);
    }
  }
}
