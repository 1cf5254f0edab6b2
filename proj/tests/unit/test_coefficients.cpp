#include <gtest/gtest.h>

#include <cmath>
#include <random>

#include "optocav/errors.hpp"
#include "optocav/phase.hpp"
#include "reference_values.hpp"

using namespace optocav;

namespace {

// mu k^2 = x with k = 1.
FourierCoeff B(long q, double a, double x, BStrategy s) { return coeff_B(q, a, x, 1.0, s); }

double rel(const LogComplex& v, ref::LogPair r) { return relative_difference(v, LogComplex::polar(r.log_mag, r.phase)); }

}  // namespace

TEST(CoeffB, ZeroIndexIsExactlyOne) {
  for (auto s : {BStrategy::series, BStrategy::kummer, BStrategy::bessel, BStrategy::automatic})
    for (double a : {0.0, 1.0, 30.0, 500.0}) {
      const auto c = coeff_B(0, a, 0.3, 2.0, s);
      EXPECT_EQ(c.value.log_mag, 0.0);
      EXPECT_EQ(c.value.phase, 0.0);
    }
}

TEST(CoeffA, ZeroIndexIsOne) {
  for (double a : {0.5, 3.0, 40.0, 300.0}) EXPECT_NEAR(coeff_A(0, a, 0.1, 1.0).value.log_mag, 0.0, 1e-12) << a;
}

TEST(CoeffB, MatchesHighPrecisionReference) {
  for (const auto& c : ref::kB)
    for (auto s : {BStrategy::series, BStrategy::kummer, BStrategy::bessel})
      EXPECT_LT(rel(B(c.q, c.alpha, c.x, s).value, c.value), 1e-10) << c.q << " " << c.alpha << " " << to_string(s);
}

TEST(CoeffB, LargeAmplitudeMatchesReference) {
  const double k = 7.0, mu = evolution_point(0.01).mu;
  for (const auto& c : ref::kBLarge) {
    EXPECT_LT(rel(coeff_B(c.q, c.alpha, mu, k, BStrategy::series).value, c.value), 1e-10) << c.q;
    EXPECT_LT(rel(coeff_B(c.q, c.alpha, mu, k, BStrategy::automatic).value, c.value), 1e-10) << c.q;
  }
}

TEST(CoeffA, MatchesHighPrecisionReference) {
  for (const auto& c : ref::kA) EXPECT_LT(rel(coeff_A(c.q, c.alpha, c.x, 1.0).value, c.value), 1e-11) << c.q;
}

TEST(CoeffB, ThreeRoutesAgreeOnAcceptanceGrid) {
  for (double a : {1.0, 5.0, 30.0})
    for (double x : {0.0, 0.03, 0.2})
      for (long q = -20; q <= 20; ++q) {
        const auto s = B(q, a, x, BStrategy::series), k = B(q, a, x, BStrategy::kummer),
                   b = B(q, a, x, BStrategy::bessel);
        ASSERT_LT(relative_difference(k.value, s.value), 1e-10) << a << " " << x << " " << q;
        ASSERT_LT(relative_difference(b.value, s.value), 1e-10) << a << " " << x << " " << q;
      }
}

TEST(CoeffB, KummerAndBesselAgreeAtQ1) {
  EXPECT_LT(relative_difference(B(1, 4.0, 0.0, BStrategy::kummer).value, B(1, 4.0, 0.0, BStrategy::bessel).value), 1e-12);
}

TEST(CoeffB, AsymptoticLeadingCloseAtLargeAmplitude) {
  const double k = 7.0, mu = evolution_point(0.01).mu;
  const auto a = coeff_B(5, 500.0, mu, k, BStrategy::asymptotic), s = coeff_B(5, 500.0, mu, k, BStrategy::series);
  EXPECT_LT(relative_difference(a.value, s.value), 1e-5);
  EXPECT_THROW(coeff_B(3, 0.0, mu, k, BStrategy::asymptotic), DomainError);
}

TEST(Coefficients, NegativeIndexGivesConjugate) {
  std::mt19937_64 rng(11);
  std::uniform_real_distribution<double> ad(0.5, 40.0), xd(0.0, 0.3);
  std::uniform_int_distribution<long> qd(1, 25);
  for (int i = 0; i < 30; ++i) {
    const double a = ad(rng), x = xd(rng);
    const long q = qd(rng);
    const auto p = B(q, a, x, BStrategy::automatic), m = B(-q, a, x, BStrategy::automatic);
    EXPECT_LT(relative_difference(m.value, p.value.conj()), 1e-12);
    const auto pa = coeff_A(q, a, x, 1.0), ma = coeff_A(-q, a, x, 1.0);
    EXPECT_LT(relative_difference(ma.value, pa.value.conj()), 1e-12);
    EXPECT_DOUBLE_EQ(std::abs(p.xi_q), a);
  }
}

TEST(Coefficients, RealWhenPhaseFactorVanishes) {
  for (long q : {1L, 4L, 9L}) {
    const auto a = coeff_A(q, 6.0, 0.0, 1.0), b = B(q, 6.0, 0.0, BStrategy::automatic);
    EXPECT_NEAR(a.value.phase, 0.0, 1e-14);
    EXPECT_NEAR(b.value.phase, 0.0, 1e-14);
    EXPECT_LT(a.value.log_mag, 0.0);
  }
}

TEST(Coefficients, BoundedByOne) {
  // B_60 at |alpha| = 200 sits near e^-25500 and needs ~37k-bit arithmetic; q_cutoff never asks for it.
  for (auto [a, q] : {std::pair{2.0, 1L}, {2.0, 10L}, {2.0, 60L}, {20.0, 1L}, {20.0, 10L}, {20.0, 60L}, {200.0, 1L}, {200.0, 10L}}) {
      EXPECT_LE(coeff_A(q, a, 0.01, 1.0).value.log_mag, 1e-14);
      EXPECT_LE(B(q, a, 0.01, BStrategy::automatic).value.log_mag, 1e-14);
  }
}

TEST(AutoStrategy, BoundaryCheckRuns) {
  coeff_B(3, 10.0, 0.01, 1.0, BStrategy::automatic);
  const auto r = auto_boundary_report();
  EXPECT_TRUE(r.ran);
  EXPECT_TRUE(r.ok);
  EXPECT_LT(r.rel_diff_low, 1e-10);
  EXPECT_LT(r.rel_diff_high, 1e-10);
}

TEST(Strategy, ParsesNames) {
  EXPECT_EQ(parse_strategy("auto"), BStrategy::automatic);
  EXPECT_EQ(parse_strategy("bessel"), BStrategy::bessel);
  EXPECT_EQ(to_string(BStrategy::kummer), "kummer");
  EXPECT_THROW(parse_strategy("magic"), std::invalid_argument);
}

TEST(QCutoff, GaussianPrefactorNegligibleBeyondCut) {
  const auto ep = evolution_point(0.01);
  const long qc = q_cutoff(ep.mu_dot, 7.0, 500.0);
  EXPECT_LT(ep.mu_dot * 49.0 * static_cast<double>(qc * qc), 1e6);
  EXPECT_GT(ep.mu_dot * 49.0 * static_cast<double>((qc - 10) * (qc - 10)), 31.9);
}
