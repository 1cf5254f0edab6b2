#pragma once

#include <complex>
#include <utility>

#include "optocav/params.hpp"

namespace optocav {

/// Homodyne quadrature X_phi = a e^{-i phi} + a^dag e^{i phi} statistics. Vacuum variance is 1.
struct QuadratureResult {
  double phi = 0.0;
  double mean_x = 0.0;
  double variance = 1.0;
  std::complex<double> mean_a{0.0, 0.0};
  std::complex<double> mean_a2{0.0, 0.0};
};

/// Decay exponent Gamma and angle vartheta of the approximate variance.
struct QuadApprox {
  double big_gamma = 0.0;
  double vartheta = 0.0;
};

/// <a> for beta = 0 (rotating frame).
std::complex<double> expect_a(std::complex<double> alpha, EvolutionPoint ep, double k);
/// <a^2> for beta = 0 (rotating frame).
std::complex<double> expect_a2(std::complex<double> alpha, EvolutionPoint ep, double k);

QuadratureResult quadrature_variance(double phi, std::complex<double> alpha, EvolutionPoint ep, double k);

std::pair<double, QuadApprox> quadrature_variance_approx(double phi, std::complex<double> alpha,
                                                         EvolutionPoint ep, double k);

/// 1 + 2|alpha|^2 (1 - e^{-Gamma})^2.
double min_variance_approx(double alpha_abs, double big_gamma);

/// Gamma = k^2 tau^2 (1 + k^2 |alpha|^2 tau^4 / 9).
double quad_big_gamma(double k, double tau, double alpha_abs);

/// Local-oscillator phase where vartheta = 0.
double phi_at_vartheta_zero(std::complex<double> alpha, EvolutionPoint ep, double k);

/// Golden-section minimum of the exact variance over phi, bracketed by
/// +-pi/4 around the approximate optimum; tolerance 1e-10 rad.
QuadratureResult minimize_variance(std::complex<double> alpha, EvolutionPoint ep, double k);

}  // namespace optocav
