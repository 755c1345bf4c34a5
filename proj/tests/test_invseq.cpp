#include <gtest/gtest.h>

#include <random>
#include <set>

#include "oracles.hpp"
#include "qinv/invseq.hpp"

using namespace qinv;

TEST(InvSeq, ValidatesEntries) {
  EXPECT_NO_THROW(InvSeq({0, 1, 0, 3}));
  EXPECT_THROW(InvSeq({1}), std::invalid_argument);
  EXPECT_THROW(InvSeq({0, 2}), std::invalid_argument);
  EXPECT_THROW(InvSeq({0, -1}), std::invalid_argument);
  EXPECT_THROW(InvSeq(std::vector<int>{}), std::invalid_argument);
}

TEST(InvSeq, TextForms) {
  EXPECT_EQ(InvSeq::parse("0012").to_string(), "0012");
  EXPECT_EQ(InvSeq::parse("0,0,1,2"), InvSeq({0, 0, 1, 2}));
  std::vector<int> big(12, 0);
  big[11] = 10;
  EXPECT_EQ(InvSeq(big).to_string(), "0,0,0,0,0,0,0,0,0,0,0,10");
  EXPECT_EQ(InvSeq::parse(InvSeq(big).to_string()), InvSeq(big));
  EXPECT_THROW(InvSeq::parse("01a"), std::invalid_argument);
}

TEST(InvSeq, WorkedStatistics) {
  const StatVector s = stats(InvSeq({0, 0, 0, 2, 4, 0, 5}));
  EXPECT_EQ(s.inv, 2);
  EXPECT_EQ(s.sum, 11);
  EXPECT_EQ(s.noz, 4);
  EXPECT_EQ(s.tel, 3);
  EXPECT_EQ(s.uel, 1);

  const StatVector one = stats(InvSeq({0}));
  EXPECT_EQ(one.inv, 0);
  EXPECT_EQ(one.noz, 1);
  EXPECT_EQ(one.tel, 0);
  EXPECT_EQ(one.uel, 0);

  const StatVector inc = stats(InvSeq({0, 1, 2}));
  EXPECT_EQ(inc.sum, 3);
  EXPECT_EQ(inc.dist, 3);
  EXPECT_EQ(inc.tel, 0);
}

TEST(InvSeq, StatisticsMatchOracleAndInvariants) {
  for (int n = 1; n <= 7; ++n) {
    oracle::each_invseq(n, [&](const std::vector<int>& e) {
      const StatVector s = stats(InvSeq(e));
      const oracle::Stats o = oracle::stats(e);
      ASSERT_EQ(s.inv, o.inv);
      ASSERT_EQ(s.sum, o.sum);
      ASSERT_EQ(s.noz, o.noz);
      ASSERT_EQ(s.tel, o.tel);
      ASSERT_EQ(s.uel, o.uel);
      ASSERT_GE(s.noz, 1);
      ASSERT_LE(s.noz, n);
      ASSERT_EQ(s.dist + s.tel, n);
      ASSERT_LE(s.uel, n - 1);
    });
  }
}

TEST(InvSeq, StreamVisitsEachSequenceOnce) {
  for (int n = 1; n <= 7; ++n) {
    std::set<std::vector<int>> seen;
    InvSeqStream s(n);
    while (s.next()) {
      std::vector<int> v(s.current().begin(), s.current().end());
      ASSERT_TRUE(is_inversion_sequence(v));
      ASSERT_TRUE(seen.insert(v).second);
    }
    EXPECT_EQ(Integer(static_cast<unsigned long>(seen.size())), oracle::factorial(n));
    EXPECT_EQ(enumerate(n).size(), seen.size());
  }
}

TEST(InvSeq, StreamRefusesLargeNWithoutOverride) {
  EXPECT_THROW(InvSeqStream(kDefaultEnumerationBound + 1), std::invalid_argument);
  EXPECT_NO_THROW(InvSeqStream(kDefaultEnumerationBound + 1, std::nullopt, true));
}

TEST(InvSeq, BruteFMatchesOracle) {
  for (int n = 1; n <= 7; ++n) EXPECT_EQ(brute_F(n), oracle::F(n)) << n;
  EXPECT_EQ(constant_value(eval_partial(brute_F(6), std::map<std::string, long>{{"x", 1}, {"y", 1}, {"z", 1}, {"p", 1}, {"q", 1}})), 720);
}

TEST(InvSeq, FreqVecValidation) {
  EXPECT_NO_THROW(FreqVec({2, 1, 0}));
  EXPECT_THROW(FreqVec({1, 1, 0}), std::invalid_argument);   // sum != n
  EXPECT_THROW(FreqVec({1, 0, 2}), std::invalid_argument);   // |e|_2 > 1
  EXPECT_THROW(FreqVec({4, -1, 0}), std::invalid_argument);
  EXPECT_EQ(freq(InvSeq({0, 1, 0, 3})), FreqVec({2, 1, 0, 1}));
}

TEST(InvSeq, FixedFrequencyMatchesFilteredEnumeration) {
  for (int n = 1; n <= 7; ++n) {
    std::map<std::vector<int>, QLaurent> brute;
    oracle::each_invseq(n, [&](const std::vector<int>& e) {
      std::vector<int> c(static_cast<std::size_t>(n), 0);
      for (int v : e) ++c[static_cast<std::size_t>(v)];
      brute[c].add_term(oracle::inv(e), 1);
    });
    QLaurent total;
    for (const FreqVec& v : all_freq_vectors(n)) {
      const std::vector<int> key(v.counts().begin(), v.counts().end());
      const QLaurent want = brute.count(key) ? brute[key] : QLaurent();
      ASSERT_EQ(fixed_freq_poly(v), want);
      total += fixed_freq_poly(v);
    }
    EXPECT_EQ(total, to_qlaurent(eval_partial(oracle::F(n), {{Var::x, 1}, {Var::y, 1}, {Var::z, 1}, {Var::p, 1}})));
  }
}

TEST(InvSeq, FixedFrequencySmallCases) {
  // Satisfies every FreqVec bound, yet e_0 = 0 makes it unrealisable.
  EXPECT_EQ(fixed_freq_poly(FreqVec({0, 2, 1})), QLaurent());
  EXPECT_EQ(fixed_freq_poly(FreqVec({1})), QLaurent(1L));
  QLaurent one_plus_q(1L);
  one_plus_q.add_term(1, 1);
  EXPECT_EQ(fixed_freq_poly(FreqVec({2, 1, 0})), one_plus_q);
  EXPECT_EQ(brute_fixed_freq(FreqVec({2, 1, 0})), one_plus_q);
}

TEST(InvSeq, FixedFrequencyLengthEightSample) {
  // zeros and values 1, 3, 4 with multiplicities, compared against direct filtering
  std::mt19937 rng(8);
  const auto vectors = all_freq_vectors(8);
  std::uniform_int_distribution<std::size_t> pick(0, vectors.size() - 1);
  for (int trial = 0; trial < 15; ++trial) {
    const FreqVec& v = vectors[pick(rng)];
    EXPECT_EQ(fixed_freq_poly(v), brute_fixed_freq(v));
  }
  const FreqVec s({4, 1, 0, 2, 1, 0, 0, 0});
  EXPECT_EQ(fixed_freq_poly(s), brute_fixed_freq(s));
}
