#include <cyclo/errors.hpp>
#include <cyclo/moments.hpp>

#include <gtest/gtest.h>

#include "support/oracles.hpp"

using cyclo::BoxSpec;
using cyclo::Errc;
using cyclo::Error;
using cyclo::Rational;

namespace {

template <class Fn>
Errc code_of(Fn&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  ADD_FAILURE() << "no cyclo::Error thrown";
  return Errc::invalid_argument;
}

Rational ratio(const Rational& a, const Rational& b) { return a / b; }

}  // namespace

TEST(PowerSum, Examples) {
  for (int n : {1, 2, 9}) EXPECT_EQ(cyclo::power_sum(1, n), 0);
  EXPECT_EQ(cyclo::power_sum(2, 2), 10);
  EXPECT_EQ(cyclo::power_sum(4, 1), 2);
  EXPECT_EQ(cyclo::power_sum(0, 3), 7);
  EXPECT_EQ(code_of([] { cyclo::power_sum(5, 1); }), Errc::unsupported_exponent);
}

TEST(PowerSum, MatchesDirectSummation) {
  for (int r = 0; r <= 4; ++r)
    for (int n = 1; n <= 30; ++n) {
      cyclo::Integer direct;
      for (long a = -n; a <= n; ++a) {
        cyclo::Integer term = 1;
        for (int i = 0; i < r; ++i) term *= a;
        direct += term;
      }
      EXPECT_EQ(cyclo::power_sum(r, n), Rational(direct)) << "r=" << r << " n=" << n;
    }
}

TEST(SecondMoment, Examples) {
  EXPECT_EQ(cyclo::m2_closed(BoxSpec(3, 1)), Rational(40, 3));
  EXPECT_EQ(cyclo::m2_closed(BoxSpec(5, 1)), Rational(304, 3));
  EXPECT_EQ(cyclo::m2_closed(BoxSpec(3, 2)), 40);
}

TEST(SecondMoment, MatchesPairEnumeration) {
  for (auto [p, n] : {std::pair{3, 1}, {3, 2}, {5, 1}}) {
    const auto s = oracle::enumerate_pairs(p, n);
    EXPECT_EQ(cyclo::m2_closed(BoxSpec(p, n)), cyclo::fraction(s.sum_d2, s.pairs));
  }
}

TEST(SecondMoment, LeadingTerm) {
  for (int p : {101, 211, 1009})
    for (int n : {100, 1000}) {
      const BoxSpec box(p, n);
      EXPECT_NEAR(ratio(cyclo::m2_closed(box), cyclo::mu(box)).get_d(), 1.0, 0.05);
    }
}

TEST(DoubleSquareSum, Examples) {
  EXPECT_EQ(cyclo::double_square_sum_normalized(BoxSpec(3, 1)), Rational(104, 9));
  // Both the formula and the pair enumeration give 112/3 at (5,1).
  EXPECT_EQ(cyclo::double_square_sum_normalized(BoxSpec(5, 1)), Rational(112, 3));
  EXPECT_EQ(cyclo::double_square_sum_normalized(BoxSpec(3, 2)), Rational(536, 5));
}

TEST(DoubleSquareSum, IsTheRawSumOverPairCount) {
  for (auto [p, n] : {std::pair{3, 1}, {3, 2}, {5, 1}}) {
    const auto s = oracle::enumerate_pairs(p, n);
    EXPECT_EQ(cyclo::double_square_sum_normalized(BoxSpec(p, n)), cyclo::fraction(s.sum_double_square, s.pairs));
  }
  EXPECT_EQ(oracle::enumerate_pairs(3, 1).sum_double_square, 936);
}

TEST(FourthMoment, Examples) {
  EXPECT_EQ(cyclo::m4_closed(BoxSpec(3, 1)), Rational(1208, 3));
  EXPECT_EQ(cyclo::m4_closed(BoxSpec(3, 2)), 3704);
  EXPECT_EQ(cyclo::m4_closed(BoxSpec(5, 1)), Rational(45040, 3));
}

TEST(FourthMoment, MatchesPairEnumeration) {
  for (auto [p, n] : {std::pair{3, 1}, {3, 2}, {5, 1}}) {
    const auto s = oracle::enumerate_pairs(p, n);
    EXPECT_EQ(cyclo::m4_closed(BoxSpec(p, n)), cyclo::fraction(s.sum_d4, s.pairs));
  }
}

TEST(FourthMoment, CauchySchwarzAndLeadingTerm) {
  for (int p : {3, 5, 7, 11, 31, 101})
    for (int n : {1, 2, 10, 100}) {
      const BoxSpec box(p, n);
      const Rational m2 = cyclo::m2_closed(box);
      EXPECT_GE(cyclo::m4_closed(box), Rational(m2 * m2));
    }
  for (int p : {101, 211, 1009})
    for (int n : {100, 1000}) {
      const BoxSpec box(p, n);
      const Rational mu = cyclo::mu(box);
      EXPECT_NEAR(ratio(cyclo::m4_closed(box), Rational(mu * mu)).get_d(), 1.0, 0.05);
    }
}

TEST(Mu, Examples) {
  EXPECT_EQ(cyclo::mu(BoxSpec(3, 1)), 18);
  EXPECT_EQ(cyclo::mu(BoxSpec(5, 2)), Rational(1000, 3));
  EXPECT_NE(cyclo::mu(BoxSpec(3, 1)), cyclo::m2_closed(BoxSpec(3, 1)));
}

TEST(RMoment, Examples) {
  EXPECT_EQ(cyclo::r_moment_closed(BoxSpec(3, 1)), Rational(740, 3));
  for (auto [p, n] : {std::pair{3, 1}, {3, 2}, {5, 1}}) {
    const auto s = oracle::enumerate_pairs(p, n);
    EXPECT_EQ(cyclo::r_moment_closed(BoxSpec(p, n)), cyclo::fraction(s.sum_centered_sq, 9 * s.pairs));
  }
}

TEST(RMoment, NonNegativeAndBoundedGrowth) {
  for (int p : {3, 5, 11, 31, 101})
    for (int n : {1, 10, 100}) {
      const BoxSpec box(p, n);
      const Rational r = cyclo::r_moment_closed(box);
      const Rational m2 = cyclo::m2_closed(box), mu = cyclo::mu(box);
      EXPECT_GE(r, Rational((m2 - mu) * (m2 - mu)));
      const cyclo::Integer P = p, N = n;
      const cyclo::Integer scale = P * P * P * P * P * N * N * N * N + P * P * P * P * P * P * N * N * N;
      EXPECT_LE(r / Rational(scale), 1) << "p=" << p << " N=" << n;
    }
}

TEST(ConcentrationBound, Examples) {
  EXPECT_EQ(cyclo::concentration_bound(Rational(1), BoxSpec(3, 1)), Rational(185, 1458));
  const BoxSpec big(101, 100);
  const Rational tight = cyclo::concentration_bound(Rational(1, 20), big);
  EXPECT_LT(cyclo::concentration_bound(Rational(1, 10), big), tight);
  EXPECT_GT(tight, 0);
  EXPECT_LT(tight, 1);
  EXPECT_EQ(cyclo::concentration_bound(0.5, big), cyclo::concentration_bound(Rational(1, 2), big));
  EXPECT_EQ(code_of([&] { cyclo::concentration_bound(Rational(0), big); }), Errc::non_positive_epsilon);
  EXPECT_EQ(code_of([&] { cyclo::concentration_bound(-0.1, big); }), Errc::non_positive_epsilon);
}

TEST(MomentReport, Invariants) {
  for (int p : {3, 5, 7, 13})
    for (int n : {1, 3}) {
      const auto report = cyclo::closed_form_report(BoxSpec(p, n));
      EXPECT_EQ(report.source, cyclo::MomentSource::closed_form);
      EXPECT_GE(report.m4, Rational(report.m2 * report.m2));
      EXPECT_EQ(report.r_moment, Rational(report.m4 - 2 * report.mu * report.m2 + report.mu * report.mu));
      EXPECT_GE(report.r_moment, 0);
    }
}
