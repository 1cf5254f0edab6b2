#include <gtest/gtest.h>

#include <cmath>
#include <numbers>
#include <random>
#include <vector>

#include "optocav/log_complex.hpp"

using optocav::LogComplex;

TEST(NormalizePhase, MapsIntoHalfOpenInterval) {
  constexpr double pi = std::numbers::pi;
  EXPECT_DOUBLE_EQ(optocav::normalize_phase(pi), pi);
  EXPECT_DOUBLE_EQ(optocav::normalize_phase(-pi), pi);
  EXPECT_NEAR(optocav::normalize_phase(3.0 * pi + 0.1), -pi + 0.1, 1e-12);
  EXPECT_NEAR(optocav::normalize_phase(1e6), std::remainder(1e6, 2.0 * pi), 1e-9);
}

TEST(LogComplex, RoundTripsThroughLinearDomain) {
  const std::complex<double> z(-3.25, 0.5);
  const auto l = LogComplex::from_complex(z);
  EXPECT_NEAR(std::abs(l.value() - z), 0.0, 1e-15);
  EXPECT_TRUE(LogComplex::from_complex(0.0).is_zero());
  EXPECT_EQ(LogComplex::zero().value(), std::complex<double>(0.0, 0.0));
}

TEST(LogComplex, HoldsMagnitudesBeyondDoubleRange) {
  const auto big = LogComplex::polar(1e6, 0.3);
  const auto tiny = LogComplex::polar(-1e6, -0.1);
  const auto p = big * tiny;
  EXPECT_NEAR(p.log_mag, 0.0, 1e-9);
  EXPECT_NEAR(p.phase, 0.2, 1e-15);
  EXPECT_EQ(tiny.value(), std::complex<double>(0.0, 0.0));
  EXPECT_NEAR((big / big).log_mag, 0.0, 0.0);
}

TEST(LogComplex, ConjugateNegatesPhase) {
  const auto a = LogComplex::polar(2.0, 1.0);
  EXPECT_DOUBLE_EQ(a.conj().phase, -1.0);
  EXPECT_DOUBLE_EQ(a.conj().log_mag, 2.0);
}

TEST(RelativeDifference, ResolvesTinyDifferences) {
  const auto a = LogComplex::polar(-700.0, 0.25);
  const auto b = LogComplex::polar(-700.0 + 1e-13, 0.25);
  // 1e-13 is about one ulp at 700; compare with the stored gap.
  EXPECT_NEAR(optocav::relative_difference(b, a), std::expm1(b.log_mag - a.log_mag), 1e-16);
  const auto c = LogComplex::polar(-700.0, 0.25 + 1e-12);
  EXPECT_NEAR(optocav::relative_difference(c, a), 1e-12, 1e-16);
  EXPECT_DOUBLE_EQ(optocav::relative_difference(a, a), 0.0);
}

TEST(LogsumComplex, MatchesLinearSumOnRandomTerms) {
  std::mt19937_64 rng(7);
  std::uniform_real_distribution<double> lm(-5.0, 5.0), ph(-3.0, 3.0);
  for (int trial = 0; trial < 50; ++trial) {
    std::vector<LogComplex> terms;
    std::complex<double> ref(0.0, 0.0);
    for (int i = 0; i < 40; ++i) {
      terms.push_back(LogComplex::polar(lm(rng), ph(rng)));
      ref += terms.back().value();
    }
    const auto s = optocav::logsum_complex(terms);
    EXPECT_LT(std::abs(s.value() - ref) / std::abs(ref), 1e-12);
  }
}

TEST(LogsumComplex, ScalesAwayHugeCommonFactor) {
  std::vector<LogComplex> terms = {LogComplex::polar(-1e5, 0.0), LogComplex::polar(-1e5 + std::log(3.0), 0.0)};
  const auto s = optocav::logsum_complex(terms);
  EXPECT_NEAR(s.log_mag, -1e5 + std::log(4.0), 1e-9);
  EXPECT_TRUE(optocav::logsum_complex({}).is_zero());
}
