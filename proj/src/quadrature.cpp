#include "optocav/quadrature.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "optocav/errors.hpp"

namespace optocav {

namespace {

EvolutionPoint with_zeta(EvolutionPoint ep, double k) {
  if (!ep.zeta_set) phase_zeta(ep, k, {0.0, 0.0});
  return ep;
}

// Exponents of <a> e^{-i phi} / |alpha| = exp(iA - P) and
// <a^2> e^{-2 i phi} / |alpha|^2 = exp(iB - R).
struct Exponents {
  double A, P, B, R;
  double b_minus_2a;  // B - 2A without cancellation
  double two_p_minus_r;
};

Exponents exponents(double phi, double alpha_abs, double phi_alpha, const EvolutionPoint& ep, double k) {
  const double x = ep.mu * k * k;
  const double a2 = alpha_abs * alpha_abs;
  const double sx = std::sin(x);
  const double s2x = std::sin(2.0 * x);
  const double theta0 = ep.zeta + phi_alpha - phi;
  const double dk = ep.mu_dot * k * k;
  Exponents e;
  e.A = theta0 + x + a2 * s2x;
  e.P = dk + 2.0 * a2 * sx * sx;
  e.B = 2.0 * theta0 + 4.0 * x + a2 * std::sin(4.0 * x);
  e.R = 4.0 * dk + 2.0 * a2 * s2x * s2x;
  e.b_minus_2a = 2.0 * x - 4.0 * a2 * s2x * sx * sx;
  e.two_p_minus_r = -2.0 * dk - 4.0 * a2 * sx * sx * std::cos(2.0 * x);
  return e;
}

}  // namespace

std::complex<double> expect_a(std::complex<double> alpha, EvolutionPoint ep, double k) {
  ep = with_zeta(ep, k);
  const auto e = exponents(0.0, std::abs(alpha), std::arg(alpha), ep, k);
  return std::abs(alpha) * std::exp(std::complex<double>(-e.P, e.A));
}

std::complex<double> expect_a2(std::complex<double> alpha, EvolutionPoint ep, double k) {
  ep = with_zeta(ep, k);
  const auto e = exponents(0.0, std::abs(alpha), std::arg(alpha), ep, k);
  return std::norm(alpha) * std::exp(std::complex<double>(-e.R, e.B));
}

QuadratureResult quadrature_variance(double phi, std::complex<double> alpha, EvolutionPoint ep, double k) {
  ep = with_zeta(ep, k);
  const double a = std::abs(alpha);
  const auto e = exponents(phi, a, std::arg(alpha), ep, k);
  // 1 + Re v - 2 (Re u)^2 rearranged so that no O(1) terms cancel
  const double half = 0.5 * e.b_minus_2a;
  const double d = -std::expm1(-2.0 * e.P) - 2.0 * std::exp(-e.R) * std::sin(2.0 * e.A + half) * std::sin(half) +
                   std::cos(2.0 * e.A) * std::exp(-2.0 * e.P) * std::expm1(e.two_p_minus_r);
  QuadratureResult r;
  r.phi = phi;
  r.variance = 1.0 + 2.0 * a * a * d;
  if (r.variance < -1e-10) throw NumericalError("negative quadrature variance " + std::to_string(r.variance));
  if (r.variance < 0.0) r.variance = 0.0;
  const auto u = std::exp(std::complex<double>(-e.P, e.A));
  r.mean_x = 2.0 * a * u.real();
  r.mean_a = expect_a(alpha, ep, k);
  r.mean_a2 = expect_a2(alpha, ep, k);
  return r;
}

double quad_big_gamma(double k, double tau, double alpha_abs) {
  const double t2 = tau * tau;
  return k * k * t2 * (1.0 + k * k * alpha_abs * alpha_abs * t2 * t2 / 9.0);
}

std::pair<double, QuadApprox> quadrature_variance_approx(double phi, std::complex<double> alpha,
                                                         EvolutionPoint ep, double k) {
  ep = with_zeta(ep, k);
  const double a = std::abs(alpha);
  QuadApprox qa;
  qa.big_gamma = quad_big_gamma(k, ep.tau, a);
  qa.vartheta = ep.zeta + std::arg(alpha) + k * k * a * a * ep.tau * ep.tau * ep.tau / 3.0 - phi;
  // 1 + e^{-2G} cos 2v - 2 e^{-G} cos^2 v = (1 - e^{-G})^2 + 2 sin^2 v e^{-G} (1 - e^{-G})
  const double em = -std::expm1(-qa.big_gamma);
  const double s = std::sin(qa.vartheta);
  const double d = em * em + 2.0 * s * s * std::exp(-qa.big_gamma) * em;
  return {1.0 + 2.0 * a * a * d, qa};
}

double min_variance_approx(double alpha_abs, double big_gamma) {
  const double em = -std::expm1(-big_gamma);
  return 1.0 + 2.0 * alpha_abs * alpha_abs * em * em;
}

double phi_at_vartheta_zero(std::complex<double> alpha, EvolutionPoint ep, double k) {
  ep = with_zeta(ep, k);
  const double a = std::abs(alpha);
  return ep.zeta + std::arg(alpha) + k * k * a * a * ep.tau * ep.tau * ep.tau / 3.0;
}

QuadratureResult minimize_variance(std::complex<double> alpha, EvolutionPoint ep, double k) {
  ep = with_zeta(ep, k);
  const double phi0 = phi_at_vartheta_zero(alpha, ep, k);
  auto f = [&](double p) { return quadrature_variance(p, alpha, ep, k).variance; };
  constexpr int kScan = 64;
  const double step = std::numbers::pi / kScan;
  double best = phi0, fbest = f(phi0);
  for (int i = -kScan / 2; i < kScan / 2; ++i) {
    const double p = phi0 + step * i;
    const double v = f(p);
    if (v < fbest) {
      fbest = v;
      best = p;
    }
  }
  const double g = 0.5 * (std::sqrt(5.0) - 1.0);
  double lo = best - step, hi = best + step;
  double x1 = hi - g * (hi - lo), x2 = lo + g * (hi - lo);
  double f1 = f(x1), f2 = f(x2);
  while (hi - lo > 1e-10) {
    if (f1 < f2) {
      hi = x2;
      x2 = x1;
      f2 = f1;
      x1 = hi - g * (hi - lo);
      f1 = f(x1);
    } else {
      lo = x1;
      x1 = x2;
      f1 = f2;
      x2 = lo + g * (hi - lo);
      f2 = f(x2);
    }
  }
  return quadrature_variance(0.5 * (lo + hi), alpha, ep, k);
}

}  // namespace optocav
