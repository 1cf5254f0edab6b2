#include <gtest/gtest.h>

#include <cmath>
#include <numbers>

#include "optocav/errors.hpp"
#include "optocav/phase.hpp"

using namespace optocav;

namespace {

constexpr double kPi = std::numbers::pi;

double sup_diff(const PhaseDistribution& a, const PhaseDistribution& b) {
  double m = 0.0;
  for (std::size_t j = 0; j < a.density.size(); ++j) m = std::max(m, std::abs(a.density[j] - b.density[j]));
  return m;
}

// Radial integral of Q(r e^{i theta}) = exp(-|r e^{i theta} - alpha|^2)/pi, Simpson on [0, R].
double radial_q(double theta, std::complex<double> alpha) {
  const double R = std::abs(alpha) + 12.0;
  const int n = 4000;
  const double h = R / n;
  double s = 0.0;
  for (int i = 0; i <= n; ++i) {
    const double r = i * h;
    const double f = r * std::exp(-std::norm(std::polar(r, theta) - alpha)) / kPi;
    s += f * (i == 0 || i == n ? 1.0 : (i % 2 ? 4.0 : 2.0));
  }
  return s * h / 3.0;
}

}  // namespace

TEST(PhaseMoments, UniformWhenOnlyZerothCoefficient) {
  const auto m = phase_moments_from_coeffs({}, 0.0, 1.0, 0.0, 0.0);
  EXPECT_EQ(m.mean, 0.0);
  EXPECT_NEAR(m.second, kPi * kPi / 3.0, 1e-15);
  EXPECT_NEAR(m.uncertainty, kPi / std::sqrt(3.0), 1e-15);
}

TEST(PQ, CoherentStateMatchesRadialQuadrature) {
  const InitialState st{std::polar(3.0, 0.4), 0.0};
  const auto p = p_q_dist(st, evolution_point(0.0), 0.7, 256);
  for (std::size_t j = 0; j < p.theta.size(); j += 8) EXPECT_NEAR(p.density[j], radial_q(p.theta[j], st.alpha), 1e-10) << j;
}

TEST(PQ, GeneralBetaRouteAgreesAtBetaZero) {
  const InitialState st{3.0, 0.0};
  const auto ep = evolution_point(0.7);
  const auto a = p_q_dist(st, ep, 0.5, 4096);
  const auto b = p_q_general_beta(st, ep, 0.5, general_beta_min_cutoff(3.0), 4096);
  EXPECT_LT(sup_diff(a, b), 1e-9);
}

TEST(PQ, RejectsDisplacedMirrorAndSmallCutoff) {
  const InitialState st{2.0, {0.5, 0.0}};
  EXPECT_THROW(p_q_dist(st, evolution_point(0.7), 0.5), UnsupportedInput);
  EXPECT_THROW(p_canonical(st, evolution_point(0.7), 0.5), UnsupportedInput);
  EXPECT_THROW(p_q_general_beta(st, evolution_point(0.7), 0.5, 10), PreconditionError);
}

TEST(PQ, VacuumIsUniform) {
  const auto p = p_q_general_beta({0.0, {0.3, 0.1}}, evolution_point(1.0), 0.5, 50, 64);
  for (double d : p.density) EXPECT_NEAR(d, 1.0 / (2.0 * kPi), 1e-15);
}

TEST(PhaseDistribution, IntegratesToOne) {
  const auto ep = evolution_point(0.01);
  for (double a : {2.0, 50.0, 500.0}) {
    const InitialState st{a, 0.0};
    EXPECT_NEAR(p_q_dist(st, ep, 7.0, 4096).integral(), 1.0, 1e-8) << a;
    EXPECT_NEAR(p_canonical(st, ep, 7.0, 4096).integral(), 1.0, 1e-8) << a;
  }
}

TEST(PhaseMoments, CoefficientMomentsMatchGridQuadrature) {
  const auto ep = evolution_point(0.05);
  const InitialState st{std::polar(20.0, 0.5), 0.0};
  const double k = 2.0;
  const auto p = p_q_dist(st, ep, k, 20000);
  const long qc = q_cutoff(ep.mu_dot, k, 20.0);
  auto e = ep;
  phase_zeta(e, k, 0.0);
  const auto m = phase_moments_from_coeffs(coeffs_B(qc, 20.0, ep.mu, k), ep.mu_dot, k, e.zeta, st.phi_alpha(), qc);
  const auto g = moments_by_quadrature(p);
  EXPECT_NEAR(m.mean, g.mean, 1e-6);
  EXPECT_NEAR(m.second, g.second, 1e-6);
  EXPECT_NEAR(m.uncertainty, g.uncertainty, 1e-6);
}

TEST(PhaseMoments, CanonicalNarrowerThanHeterodyne) {
  const auto ep = evolution_point(0.01);
  for (double a : {50.0, 100.0, 300.0, 500.0}) {
    const InitialState st{a, 0.0};
    const auto c = moments_by_quadrature(p_canonical(st, ep, 7.0, 8192));
    const auto q = moments_by_quadrature(p_q_dist(st, ep, 7.0, 8192));
    EXPECT_LE(c.uncertainty, q.uncertainty) << a;
  }
}

TEST(Canonical, PeaksAtFieldPhaseBeforeInteraction) {
  const InitialState st{std::polar(4.0, 1.0), 0.0};
  const auto p = p_canonical(st, evolution_point(0.0), 1.0, 4096);
  const auto it = std::max_element(p.density.begin(), p.density.end());
  EXPECT_NEAR(p.theta[static_cast<std::size_t>(it - p.density.begin())], 1.0, 2.0 * kPi / 4096);
}

TEST(GaussianApprox, FormulasAsDefined) {
  const double k = 7.0, tau = 0.01, a = 500.0;
  const auto g = gaussian_approx(k, tau, a, 0.2, -0.1);
  const double e1 = k * k * std::pow(tau, 4) * a * a / 9.0 - tau * tau / 12.0 + std::pow(tau, 4) / 360.0;
  EXPECT_NEAR(g.eps1, e1, 1e-12 * std::abs(e1));
  EXPECT_NEAR(g.eps2, k * k * std::pow(tau, 3) * a * a / 3.0, 1e-12 * g.eps2);
  EXPECT_NEAR(g.sigma, k * tau * std::sqrt(1.0 + e1), 1e-12 * g.sigma);
  EXPECT_NEAR(g.theta_tilde, 0.1 + g.eps2, 1e-15);
  EXPECT_TRUE(g.in_regime);
  EXPECT_THROW(gaussian_approx(1.0, std::nan(""), 0.0, 0.0, 0.0), DomainError);
  // 1 + eps1 has no real root in tau^2, so finite inputs stay in the domain.
  for (double t = 0.0; t < 50.0; t += 0.37) EXPECT_GT(1.0 + gaussian_approx(1.0, t, 0.0, 0.0, 0.0).eps1, 0.0);
}

TEST(GaussianComb, NormalisedAndDominatedByOneTerm) {
  GaussianApprox g;
  g.sigma = 0.01;
  g.theta_tilde = 0.0;
  for (double t = -1.0; t <= 1.0; t += 0.05) EXPECT_NEAR(p_gaussian(t, g), p_gaussian_comb(t, g), 1e-15);
  EXPECT_NEAR(p_gaussian_comb(0.0, g), 1.0 / (std::sqrt(2.0 * kPi) * 0.01), 1e-9);
  for (double s : {0.05, 0.7, 2.5})
    for (double c : {-3.0, 0.0, 2.9}) {
      g.sigma = s;
      g.theta_tilde = c;
      EXPECT_NEAR(p_gaussian_comb_dist(g, 8192).integral(), 1.0, 1e-12) << s << " " << c;
    }
}

TEST(GaussianComb, TracksExactDistributionAtLargeAmplitude) {
  const double k = 7.0, tau = 0.01, a = 1000.0;
  const auto ep = evolution_point(tau);
  const auto g = gaussian_approx(k, tau, a, 0.0, 0.0);
  const auto p = p_q_dist({a, 0.0}, ep, k, 8192);
  const double peak = p_gaussian_comb(normalize_phase(g.theta_tilde), g);
  for (std::size_t j = 0; j < p.theta.size(); ++j) {
    const double c = p_gaussian_comb(p.theta[j], g);
    if (c > 0.05 * peak) ASSERT_NEAR(p.density[j] / c, 1.0, 1e-2) << p.theta[j];
  }
}

TEST(GaussianApprox, FourierPrefactorIdentity) {
  const double k = 7.0, tau = 0.01, a = 500.0;
  const auto g = gaussian_approx(k, tau, a, 0.0, 0.0);
  const auto p = p_q_dist({a, 0.0}, evolution_point(tau), k, 8192);
  const double h = 2.0 * kPi / static_cast<double>(p.theta.size());
  for (int q = 1; q <= 3; ++q) {
    std::complex<double> s(0.0, 0.0);
    for (std::size_t j = 0; j < p.theta.size(); ++j) s += p.density[j] * std::polar(1.0, -q * (p.theta[j] - g.theta_tilde));
    s *= h;
    EXPECT_NEAR(std::abs(s) / std::exp(-0.5 * g.sigma * g.sigma * q * q), 1.0, 1e-3) << q;
  }
}

TEST(MakeDistribution, ClampsOnlyTruncationNoise) {
  auto d = make_distribution({0.0, 1.0, 2.0}, {0.5, -1e-14, 0.2}, PhaseMethod::oracle);
  EXPECT_EQ(d.clamped, 1u);
  EXPECT_EQ(d.density[1], 0.0);
  EXPECT_THROW(make_distribution({0.0, 1.0}, {0.5, -1e-6}, PhaseMethod::oracle), NumericalError);
}

TEST(HeterodyneMoments, StrategiesAgree) {
  const auto ep = evolution_point(0.01);
  const auto a = heterodyne_moments(200.0, 0.0, ep, 7.0, BStrategy::series);
  const auto b = heterodyne_moments(200.0, 0.0, ep, 7.0, BStrategy::automatic);
  EXPECT_NEAR(a.uncertainty, b.uncertainty, 1e-12);
  EXPECT_NEAR(a.mean, b.mean, 1e-12);
}
