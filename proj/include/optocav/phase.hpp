#pragma once

#include <complex>
#include <cstddef>
#include <span>
#include <string_view>
#include <vector>

#include "optocav/log_complex.hpp"
#include "optocav/params.hpp"
#include "optocav/specfun.hpp"

namespace optocav {

/// Fourier coefficient of a phase distribution at index q.
struct FourierCoeff {
  long q = 0;
  std::complex<double> xi_q{0.0, 0.0};  // |alpha| exp(-i mu k^2 q)
  LogComplex value;
};

enum class BStrategy { series, kummer, bessel, asymptotic, automatic };

std::string_view to_string(BStrategy s);
/// Parses "series", "kummer", "bessel", "asymptotic" or "auto".
BStrategy parse_strategy(std::string_view s);

/// Canonical-distribution coefficient A_q.
FourierCoeff coeff_A(long q, double alpha_abs, double mu, double k, const SeriesOptions& opt = {});

/// Heterodyne-distribution coefficient B_q by the requested route.
FourierCoeff coeff_B(long q, double alpha_abs, double mu, double k,
                     BStrategy strategy = BStrategy::automatic, const SeriesOptions& opt = {});

/// Outcome of the one-time boundary cross-check done by the automatic strategy.
struct AutoBoundaryReport {
  bool ran = false;
  double rel_diff_low = 0.0;   // kummer vs series at |alpha| = 30
  double rel_diff_high = 0.0;  // asymptotic vs series at |alpha| = 300
  bool ok = true;
};
AutoBoundaryReport auto_boundary_report();

/// Highest q worth keeping: Gaussian prefactor below e^-32, or beyond the
/// coherence envelope of the photon-number distribution.
long q_cutoff(double mu_dot, double k, double alpha_abs);

enum class PhaseMethod { canonical, heterodyne, heterodyne_general_beta, gaussian_comb, gaussian, oracle };
std::string_view to_string(PhaseMethod m);

struct PhaseDistribution {
  std::vector<double> theta;    // uniform, theta_j = -pi + 2 pi j / N
  std::vector<double> density;  // >= 0
  PhaseMethod method = PhaseMethod::canonical;
  std::size_t clamped = 0;      // tiny negative densities set to 0

  /// Periodic trapezoid integral over [-pi, pi).
  double integral() const;
};

std::vector<double> theta_grid(std::size_t n);

/// Wraps densities with the clamping policy: negatives above -1e-12 * max(1, peak)
/// become 0 and are counted, anything lower throws NumericalError.
PhaseDistribution make_distribution(std::vector<double> theta, std::vector<double> density, PhaseMethod method);

/// Canonical phase distribution; requires beta = 0.
PhaseDistribution p_canonical(const InitialState& state, EvolutionPoint ep, double k,
                              std::size_t grid_size = 8192);

/// Heterodyne (Q-function) phase distribution; requires beta = 0.
PhaseDistribution p_q_dist(const InitialState& state, EvolutionPoint ep, double k,
                           std::size_t grid_size = 8192, BStrategy strategy = BStrategy::automatic);

/// Heterodyne distribution by the direct double sum over Fock indices, any beta.
PhaseDistribution p_q_general_beta(const InitialState& state, EvolutionPoint ep, double k, long n_cut,
                                   std::size_t grid_size = 8192);

/// Smallest n_cut accepted by p_q_general_beta.
long general_beta_min_cutoff(double alpha_abs);

struct PhaseMoments {
  double mean = 0.0;
  double second = 0.0;
  double uncertainty = 0.0;
};

/// Moments on [-pi, pi) from coefficients q = 1..q_cut (entries with q <= 0 ignored).
PhaseMoments phase_moments_from_coeffs(std::span<const FourierCoeff> coeffs, double mu_dot, double k,
                                       double zeta, double phi_alpha, long q_cut = -1);

/// Moments by trapezoid quadrature on the distribution's grid.
PhaseMoments moments_by_quadrature(const PhaseDistribution& p);

/// B_1..B_qcut (or A_1..A_qcut) for one parameter point.
std::vector<FourierCoeff> coeffs_B(long q_cut, double alpha_abs, double mu, double k,
                                   BStrategy strategy = BStrategy::automatic, const SeriesOptions& opt = {});
std::vector<FourierCoeff> coeffs_A(long q_cut, double alpha_abs, double mu, double k,
                                   const SeriesOptions& opt = {});

struct GaussianApprox {
  double sigma = 0.0;
  double theta_tilde = 0.0;
  double eps1 = 0.0;
  double eps2 = 0.0;
  bool in_regime = false;  // tau < 0.1 and |alpha| > 1/(k tau)
};

GaussianApprox gaussian_approx(double k, double tau, double alpha_abs, double zeta, double phi_alpha);

/// Periodised Gaussian; m_cut < 0 picks the cut where the dropped tail < 1e-16.
double p_gaussian_comb(double theta, const GaussianApprox& ga, long m_cut = -1);
double p_gaussian(double theta, const GaussianApprox& ga);

PhaseDistribution p_gaussian_comb_dist(const GaussianApprox& ga, std::size_t grid_size = 8192);
PhaseDistribution p_gaussian_dist(const GaussianApprox& ga, std::size_t grid_size = 8192);

/// Moments of the Fourier series with Gaussian coefficients exp(-sigma^2 q^2 / 2 - i q theta~).
PhaseMoments gaussian_series_moments(const GaussianApprox& ga);

/// Heterodyne-route moments at one parameter point (beta = 0), the quantity plotted versus |alpha| and tau.
PhaseMoments heterodyne_moments(double alpha_abs, double phi_alpha, const EvolutionPoint& ep, double k,
                                BStrategy strategy = BStrategy::automatic);

}  // namespace optocav
