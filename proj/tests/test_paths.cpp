#include <gtest/gtest.h>

#include <set>

#include "oracles.hpp"
#include "qinv/paths.hpp"

using namespace qinv;

TEST(Paths, WorkedBijection) {
  const InvSeq e({0, 1, 1, 2});
  EXPECT_EQ(phi(e).to_string(), "ENEENENN");
  EXPECT_EQ(phi_inv(LatticePath("ENEENENN")), e);
  EXPECT_EQ(reverse_swap(LatticePath("ENEENENN")).to_string(), "EENENNEN");
  EXPECT_EQ(LatticePath("ENEENENN").dyck_word(), "UDUUDUDD");
}

TEST(Paths, PhiRejectsNonIncreasing) {
  EXPECT_THROW(phi(InvSeq({0, 1, 0})), std::invalid_argument);
  EXPECT_THROW(LatticePath("NE"), std::invalid_argument);
  EXPECT_THROW(LatticePath("EEN"), std::invalid_argument);
  EXPECT_THROW(LatticePath("EX"), std::invalid_argument);
}

TEST(Paths, BijectionRoundTrips) {
  for (int n = 1; n <= 9; ++n) {
    const auto wi = weakly_increasing(n);
    std::set<std::string> images;
    for (const InvSeq& e : wi) {
      ASSERT_TRUE(is_weakly_increasing(e));
      const LatticePath p = phi(e);
      ASSERT_EQ(phi_inv(p), e);
      images.insert(p.dyck_word());
    }
    const auto words = oracle::dyck_words(n);
    EXPECT_EQ(images, std::set<std::string>(words.begin(), words.end()));
    EXPECT_EQ(Integer(static_cast<unsigned long>(wi.size())), catalan(n));
  }
}

TEST(Paths, DyckStatisticsMatchOracle) {
  for (int n = 1; n <= 8; ++n) {
    for (const LatticePath& p : all_paths(n)) {
      const DyckStats s = dyck_stats(p);
      const oracle::Dyck o = oracle::dyck(p.dyck_word());
      ASSERT_EQ(s.valleys, o.valleys);
      ASSERT_EQ(s.returns, o.returns);
      ASSERT_EQ(s.first_peak_height, o.first_peak);
      ASSERT_EQ(s.last_peak_height, o.last_peak);
      ASSERT_EQ(s.peaks, s.valleys + 1);
      // reversal with swap exchanges the two peak heights
      const DyckStats r = dyck_stats(reverse_swap(p));
      ASSERT_EQ(r.first_peak_height, s.last_peak_height);
      ASSERT_EQ(reverse_swap(reverse_swap(p)), p);
    }
  }
}

TEST(Paths, DistinctValuesAreValleysPlusOneAndNozIsFirstPeak) {
  for (int n = 1; n <= 8; ++n) {
    for (const InvSeq& e : weakly_increasing(n)) {
      const DyckStats d = dyck_stats(phi(e));
      const StatVector s = stats(e);
      ASSERT_EQ(s.dist - 1, d.valleys);
      ASSERT_EQ(s.noz, d.first_peak_height);
    }
  }
}

TEST(Paths, TauOnListedPairs) {
  const std::vector<std::pair<std::string, std::string>> pairs{
      {"0001", "0010"}, {"0002", "0020"}, {"0101", "0110"}, {"0102", "0120"},
      {"0021", "0012"}, {"0013", "0103"}, {"0121", "0112"},
  };
  for (const auto& [a, b] : pairs) {
    EXPECT_EQ(tau(InvSeq::parse(a)).to_string(), b);
    EXPECT_EQ(tau(InvSeq::parse(b)).to_string(), a);
  }
  for (const char* fixed : {"0000", "0003", "0011", "0022", "0023", "0100", "0123", "0122", "0111", "0113"}) {
    EXPECT_EQ(tau(InvSeq::parse(fixed)).to_string(), fixed);
  }
}

TEST(Paths, TauInvolutionSweep) {
  for (int n = 1; n <= 8; ++n) {
    Integer fixed = 0;
    oracle::each_invseq(n, [&](const std::vector<int>& v) {
      const InvSeq e(v);
      const InvSeq t = tau(e);
      ASSERT_EQ(tau(t), e);
      if (t == e) {
        ++fixed;
      } else {
        const std::vector<int> tv(t.entries().begin(), t.entries().end());
        ASSERT_EQ(std::abs(oracle::inv(tv) - oracle::inv(v)), 1);
      }
    });
    EXPECT_EQ(fixed, oracle::involutions(n));
    EXPECT_EQ(involution_count(n), oracle::involutions(n));
  }
}

TEST(Paths, NarayanaAndReturnsTriangle) {
  EXPECT_EQ(narayana(4, 1), 6);
  const auto t = returns_triangle(5);
  EXPECT_EQ(std::vector<Integer>(t[4].begin() + 1, t[4].begin() + 5), (std::vector<Integer>{5, 5, 3, 1}));
  for (int n = 1; n <= 10; ++n) {
    std::vector<Integer> returns(static_cast<std::size_t>(n) + 1, 0);
    for (const auto& w : oracle::dyck_words(n)) ++returns[static_cast<std::size_t>(oracle::dyck(w).returns)];
    const auto tn = returns_triangle(n);
    for (int k = 1; k <= n; ++k) EXPECT_EQ(tn[n][k], returns[k]);
  }
}

TEST(Paths, FirstLastPeakRow) {
  for (int n = 1; n <= 9; ++n) {
    std::vector<Integer> h(static_cast<std::size_t>(2 * n) + 1, 0);
    for (const auto& w : oracle::dyck_words(n)) {
      const oracle::Dyck d = oracle::dyck(w);
      ++h[static_cast<std::size_t>(d.first_peak + d.last_peak)];
    }
    EXPECT_EQ(first_last_peak_row(n), h);
  }
}
