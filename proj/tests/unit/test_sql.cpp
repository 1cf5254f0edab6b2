#include <gtest/gtest.h>

#include <cmath>
#include <numbers>
#include <random>

#include "optocav/errors.hpp"
#include "optocav/sql.hpp"

using namespace optocav;

namespace {

SystemParams unit_params() {
  SystemParams p;
  p.hbar = p.mass = p.omega_m = p.c = p.cavity_length = 1.0;
  p.omega_c = p.omega_0 = 3.0;
  return p;
}

SystemParams random_params(std::mt19937_64& rng) {
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  SystemParams p;
  p.mass = std::pow(10.0, 2.0 * u(rng));
  p.cavity_length = std::pow(10.0, 3.0 * u(rng));
  p.omega_m = std::pow(10.0, 2.0 * u(rng));
  p.omega_c = p.omega_0 = std::pow(10.0, 15.0 + u(rng));
  return p;
}

}  // namespace

TEST(SensorLimits, UnitSystem) {
  const auto l = sensor_limits(unit_params(), 1.0);
  EXPECT_NEAR(l.delta_z_sql, 1.0 / std::sqrt(2.0), 1e-15);
  EXPECT_NEAR(l.delta_p_sql, 1.0 / std::sqrt(2.0), 1e-15);
  EXPECT_THROW(sensor_limits(unit_params(), 0.0), DomainError);
}

TEST(SensorLimits, UncertaintyProductAndOptimum) {
  std::mt19937_64 rng(5);
  for (int i = 0; i < 50; ++i) {
    const auto p = random_params(rng);
    const auto l = sensor_limits(p, 0.01);
    EXPECT_NEAR(l.delta_z_sql * l.delta_p_sql / (p.hbar / 2.0), 1.0, 1e-12);
    EXPECT_NEAR(l.delta_z_opt / l.delta_z_sql, std::sqrt(2.0), 1e-12);
    const auto n = noise_components(p, l.n_opt);
    EXPECT_NEAR(n.dz_pf / n.dz_rp, 1.0, 1e-12);
    EXPECT_NEAR(std::hypot(n.dz_pf, n.dz_rp) / l.delta_z_sql, std::sqrt(2.0), 1e-12);
  }
}

TEST(NoiseComponents, OptimumMinimisesSumOverThreeDecades) {
  std::mt19937_64 rng(9);
  const auto p = random_params(rng);
  const auto l = sensor_limits(p, 1.0);
  double best_n = 0.0, best = INFINITY;
  for (int i = -1500; i <= 1500; ++i) {
    const double n = l.n_opt * std::pow(10.0, i / 1000.0);
    const auto c = noise_components(p, n);
    const double s = c.dz_pf * c.dz_pf + c.dz_rp * c.dz_rp;
    if (s < best) best = s, best_n = n;
  }
  EXPECT_NEAR(std::log10(best_n / l.n_opt), 0.0, 1e-3);
  const auto lo = noise_components(p, 1e-6 * l.n_opt), hi = noise_components(p, 1e6 * l.n_opt);
  EXPECT_GT(lo.dz_pf, hi.dz_pf);
  EXPECT_LT(lo.dz_rp, hi.dz_rp);
}

TEST(SchemeSensitivity, PhaseLimitedResolutionIsExactlySql) {
  std::mt19937_64 rng(13);
  for (int i = 0; i < 20; ++i) {
    const auto p = random_params(rng);
    const auto d = derive_dimensionless(p);
    for (double tau : {0.01, 0.3, 2.0}) {
      const auto s = scheme_sensitivity(p, d, tau, d.k * tau, 0.0);
      const auto l = sensor_limits(p, tau / p.omega_m);
      EXPECT_NEAR(s.delta_z_min / l.delta_z_sql, 1.0, 1e-12);
      EXPECT_NEAR(s.f_min / l.f_sql, 6.0 / tau, 1e-12 * 6.0 / tau);
      EXPECT_NEAR(s.q_m * d.k * tau, 1.0, 1e-12);
      EXPECT_NEAR(s.bounces, tau * p.c / (2.0 * p.omega_m * p.cavity_length), 1e-12 * s.bounces);
    }
  }
}

TEST(SchemeSensitivity, SignalToNoiseSmallTimeReduction) {
  const auto p = interferometer_preset();
  const auto d = derive_dimensionless(p);
  const double tau = 0.01;
  const auto s = scheme_sensitivity(p, d, tau, d.k * tau, 1e-9);
  EXPECT_NEAR(s.snr / s.snr_small_tau, 1.0, 0.1 * tau * tau);
  EXPECT_GT(s.snr, 0.0);
  EXPECT_THROW(scheme_sensitivity(p, d, 0.0, 1.0, 0.0), DomainError);
  EXPECT_THROW(scheme_sensitivity(p, d, 0.1, 0.0, 0.0), DomainError);
}

TEST(SchemeSensitivity, MinimumForceSignalToNoiseIsOne) {
  const auto p = interferometer_preset();
  const auto d = derive_dimensionless(p);
  const double tau = 0.01;
  const auto s0 = scheme_sensitivity(p, d, tau, d.k * tau, 0.0);
  const auto s = scheme_sensitivity(p, d, tau, d.k * tau, s0.f_min);
  EXPECT_NEAR(s.snr_small_tau, 1.0, 1e-12);
}

TEST(QmIdentity, HoldsForDerivedParameters) {
  std::mt19937_64 rng(17);
  for (int i = 0; i < 20; ++i) {
    const auto p = random_params(rng);
    EXPECT_LT(qm_identity_check(p, derive_dimensionless(p), 1e-3), 1e-10);
  }
  const auto u = unit_params();
  EXPECT_LT(qm_identity_check(u, derive_dimensionless(u), 0.5), 1e-15);
}

TEST(Sql, ScalesWithPlanckConstant) {
  auto p = unit_params();
  const double base = sensor_limits(p, 1.0).delta_z_sql;
  p.hbar = 4.0;
  EXPECT_NEAR(sensor_limits(p, 1.0).delta_z_sql / base, 2.0, 1e-15);
}

TEST(Sql, ForceRatioAtOnePercentCycle) {
  const auto p = interferometer_preset();
  const auto d = derive_dimensionless(p);
  const auto s = scheme_sensitivity(p, d, 0.01, d.k * 0.01, 0.0);
  EXPECT_NEAR(s.f_min / sensor_limits(p, 0.01 / p.omega_m).f_sql, 600.0, 1e-9);
}

TEST(InterferometerPreset, OrderOfMagnitude) {
  const auto p = interferometer_preset();
  const auto l = sensor_limits(p, 1e-3);
  EXPECT_GE(l.n_opt, 1e21);
  EXPECT_LE(l.n_opt, 1e22);
  const auto d = derive_dimensionless(p);
  const auto s = scheme_sensitivity(p, d, p.omega_m * 1e-3, d.k * p.omega_m * 1e-3, 0.0);
  EXPECT_GE(s.q_m, 1e9);
  EXPECT_LE(s.q_m, 1e10);
}
