#include "optocav/phase.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <string>

#include "optocav/errors.hpp"
#include "optocav/kernels.hpp"

namespace optocav {

namespace {

constexpr double kPi = std::numbers::pi;

EvolutionPoint with_zeta(EvolutionPoint ep, double k, std::complex<double> beta) {
  if (!ep.zeta_set) phase_zeta(ep, k, beta);
  return ep;
}

void require_beta_zero(const InitialState& s) {
  if (s.beta != std::complex<double>(0.0, 0.0))
    throw UnsupportedInput("Fourier-series phase distributions need beta = 0; use p_q_general_beta or the oracle");
}

void require_grid(std::size_t n) {
  if (n < 16) throw PreconditionError("phase grid needs at least 16 points");
}

PhaseDistribution finish(std::vector<double> theta, std::vector<double> density, PhaseMethod m) {
  return make_distribution(std::move(theta), std::move(density), m);
}

// P(theta) = (1/2pi) [1 + 2 sum_{q>=1} Re(W_q e^{i q theta})].
std::vector<double> synthesize(std::span<const std::complex<double>> w, std::span<const double> theta) {
  std::vector<double> a(w.size() + 1), b(w.size() + 1);
  a[0] = 1.0;
  for (std::size_t i = 0; i < w.size(); ++i) {
    a[i + 1] = 2.0 * w[i].real();
    b[i + 1] = 2.0 * w[i].imag();
  }
  std::vector<double> out(theta.size());
  kernels::active().cosine_series(a, b, theta, out);
  for (double& v : out) v /= 2.0 * kPi;
  return out;
}

std::vector<std::complex<double>> weighted(std::span<const FourierCoeff> coeffs, double mu_dot, double k,
                                           double shift, long q_cut) {
  std::vector<std::complex<double>> w;
  for (const auto& c : coeffs) {
    if (c.q <= 0) continue;
    if (q_cut >= 0 && c.q > q_cut) continue;
    const double qd = static_cast<double>(c.q);
    const LogComplex g = LogComplex::polar(-mu_dot * k * k * qd * qd, -qd * shift);
    const std::size_t idx = static_cast<std::size_t>(c.q - 1);
    if (w.size() <= idx) w.resize(idx + 1);
    w[idx] = (c.value * g).value();
  }
  return w;
}

PhaseMoments moments_from_w(std::span<const std::complex<double>> w) {
  double mean = 0.0, second = kPi * kPi / 3.0;
  for (std::size_t i = 0; i < w.size(); ++i) {
    const double q = static_cast<double>(i + 1);
    const double sgn = (i % 2 == 0) ? -1.0 : 1.0;  // (-1)^q
    mean += 2.0 * sgn * w[i].imag() / q;
    second += 4.0 * sgn * w[i].real() / (q * q);
  }
  PhaseMoments m;
  m.mean = mean;
  m.second = std::clamp(second, 0.0, kPi * kPi);
  const double var = m.second - mean * mean;
  if (var < -1e-12) throw NumericalError("negative phase variance " + std::to_string(var));
  m.uncertainty = std::sqrt(std::max(var, 0.0));
  return m;
}

}  // namespace

PhaseDistribution make_distribution(std::vector<double> theta, std::vector<double> density, PhaseMethod m) {
  PhaseDistribution p;
  p.method = m;
  double peak = 0.0;
  for (double v : density) {
    if (!std::isfinite(v)) throw NumericalError("non-finite phase density");
    peak = std::max(peak, v);
  }
  const double floor = -1e-12 * std::max(1.0, peak);
  for (double& v : density) {
    if (v < 0.0) {
      if (v < floor) throw NumericalError("phase density negative beyond truncation noise: " + std::to_string(v));
      v = 0.0;
      ++p.clamped;
    }
  }
  p.theta = std::move(theta);
  p.density = std::move(density);
  return p;
}

std::string_view to_string(PhaseMethod m) {
  switch (m) {
    case PhaseMethod::canonical: return "canonical";
    case PhaseMethod::heterodyne: return "heterodyne";
    case PhaseMethod::heterodyne_general_beta: return "heterodyne_general_beta";
    case PhaseMethod::gaussian_comb: return "gaussian_comb";
    case PhaseMethod::gaussian: return "gaussian";
    case PhaseMethod::oracle: return "oracle";
  }
  return "unknown";
}

double PhaseDistribution::integral() const {
  if (theta.empty()) return 0.0;
  double s = 0.0;
  for (double v : density) s += v;
  return s * 2.0 * kPi / static_cast<double>(theta.size());
}

std::vector<double> theta_grid(std::size_t n) {
  std::vector<double> t(n);
  for (std::size_t j = 0; j < n; ++j) t[j] = -kPi + 2.0 * kPi * static_cast<double>(j) / static_cast<double>(n);
  return t;
}

long q_cutoff(double mu_dot, double k, double alpha_abs) {
  const double decay = mu_dot * k * k;
  double bound = 16.0 * alpha_abs;
  if (decay > 0.0) bound = std::min(bound, std::sqrt(32.0 / decay));
  return static_cast<long>(std::ceil(bound)) + 10;
}

PhaseMoments phase_moments_from_coeffs(std::span<const FourierCoeff> coeffs, double mu_dot, double k,
                                       double zeta, double phi_alpha, long q_cut) {
  const auto w = weighted(coeffs, mu_dot, k, zeta + phi_alpha, q_cut);
  return moments_from_w(w);
}

PhaseMoments moments_by_quadrature(const PhaseDistribution& p) {
  const auto g = kernels::active().grid_moments(p.theta, p.density);
  const double h = 2.0 * kPi / static_cast<double>(p.theta.size());
  PhaseMoments m;
  const double norm = g.m0 * h;
  m.mean = g.m1 * h / norm;
  m.second = g.m2 * h / norm;
  m.uncertainty = std::sqrt(std::max(m.second - m.mean * m.mean, 0.0));
  return m;
}

PhaseDistribution p_canonical(const InitialState& state, EvolutionPoint ep, double k, std::size_t grid_size) {
  require_beta_zero(state);
  require_grid(grid_size);
  ep = with_zeta(ep, k, state.beta);
  const double a = state.alpha_abs();
  const long qc = q_cutoff(ep.mu_dot, k, a);
  const auto c = coeffs_A(qc, a, ep.mu, k);
  const auto w = weighted(c, ep.mu_dot, k, ep.zeta + state.phi_alpha(), qc);
  auto theta = theta_grid(grid_size);
  auto dens = synthesize(w, theta);
  return finish(std::move(theta), std::move(dens), PhaseMethod::canonical);
}

PhaseDistribution p_q_dist(const InitialState& state, EvolutionPoint ep, double k, std::size_t grid_size,
                           BStrategy strategy) {
  require_beta_zero(state);
  require_grid(grid_size);
  ep = with_zeta(ep, k, state.beta);
  const double a = state.alpha_abs();
  const long qc = q_cutoff(ep.mu_dot, k, a);
  const auto c = coeffs_B(qc, a, ep.mu, k, strategy);
  const auto w = weighted(c, ep.mu_dot, k, ep.zeta + state.phi_alpha(), qc);
  auto theta = theta_grid(grid_size);
  auto dens = synthesize(w, theta);
  return finish(std::move(theta), std::move(dens), PhaseMethod::heterodyne);
}

long general_beta_min_cutoff(double alpha_abs) {
  return static_cast<long>(std::ceil(alpha_abs * alpha_abs + 12.0 * alpha_abs + 50.0));
}

PhaseDistribution p_q_general_beta(const InitialState& state, EvolutionPoint ep, double k, long n_cut,
                                   std::size_t grid_size) {
  require_grid(grid_size);
  const double a = state.alpha_abs();
  if (n_cut < general_beta_min_cutoff(a))
    throw PreconditionError("n_cut must be >= |alpha|^2 + 12|alpha| + 50 = " +
                            std::to_string(general_beta_min_cutoff(a)));
  ep = with_zeta(ep, k, state.beta);
  auto theta = theta_grid(grid_size);
  if (a == 0.0) {
    std::vector<double> dens(grid_size, 1.0 / (2.0 * kPi));
    return finish(std::move(theta), std::move(dens), PhaseMethod::heterodyne_general_beta);
  }
  const std::size_t n = static_cast<std::size_t>(n_cut) + 1;
  std::vector<double> lfact(n);
  for (std::size_t i = 0; i < n; ++i) lfact[i] = std::lgamma(static_cast<double>(i) + 1.0);
  const double la = std::log(a);
  const double a2 = a * a;
  const double x = ep.mu * k * k;
  const double phi = state.phi_alpha();
  // W_q = sum_n rho_{n,n+q} Gamma((2n+q)/2 + 1) / sqrt(n! (n+q)!)
  std::vector<std::complex<double>> w(n - 1);
  std::vector<LogComplex> terms;
  terms.reserve(n);
  for (std::size_t q = 1; q < n; ++q) {
    terms.clear();
    for (std::size_t i = 0; i + q < n; ++i) {
      const std::size_t j = i + q;
      const double ni = static_cast<double>(i), nj = static_cast<double>(j);
      const auto lov = log_overlap_gamma(static_cast<long>(i), static_cast<long>(j), ep, k, state.beta);
      const double lmag = -a2 + (ni + nj) * la - (lfact[i] + lfact[j]) +
                          std::lgamma(0.5 * (ni + nj) + 1.0) + lov.real();
      // rho_{n,n'} phase: (n-n')(phi + zeta) + mu k^2 (n^2 - n'^2) + Im log overlap
      const double d = ni - nj;
      const double ph = d * (phi + ep.zeta) + x * d * (ni + nj) + lov.imag();
      terms.push_back(LogComplex::polar(lmag, ph));
    }
    const LogComplex s = logsum_complex(terms);
    w[q - 1] = s.value();
  }
  auto dens = synthesize(w, theta);
  return finish(std::move(theta), std::move(dens), PhaseMethod::heterodyne_general_beta);
}

GaussianApprox gaussian_approx(double k, double tau, double alpha_abs, double zeta, double phi_alpha) {
  GaussianApprox g;
  const double t2 = tau * tau, t3 = t2 * tau, t4 = t2 * t2;
  const double a2 = alpha_abs * alpha_abs;
  g.eps1 = k * k * t4 * a2 / 9.0 - t2 / 12.0 + t4 / 360.0;
  g.eps2 = k * k * t3 * a2 / 3.0;
  if (!(1.0 + g.eps1 > 0.0)) throw DomainError("Gaussian approximation undefined: 1 + eps1 <= 0");
  g.sigma = k * tau * std::sqrt(1.0 + g.eps1);
  g.theta_tilde = zeta + phi_alpha + g.eps2;
  g.in_regime = tau < 0.1 && k * tau * alpha_abs > 1.0;
  return g;
}

double p_gaussian_comb(double theta, const GaussianApprox& ga, long m_cut) {
  if (!(ga.sigma > 0.0)) throw DomainError("p_gaussian_comb requires sigma > 0");
  const double s = ga.sigma;
  const double norm = 1.0 / (std::sqrt(2.0 * kPi) * s);
  const double d0 = theta - ga.theta_tilde;
  if (m_cut < 0) {
    // reach where norm * exp(-d^2 / 2 s^2) < 1e-16
    const double lr = std::log(norm) + 16.0 * std::log(10.0);
    const double reach = lr > 0.0 ? s * std::sqrt(2.0 * lr) : 0.0;
    m_cut = static_cast<long>(std::ceil((std::abs(d0) + reach) / (2.0 * kPi)));
  }
  double acc = 0.0;
  for (long m = -m_cut; m <= m_cut; ++m) {
    const double d = d0 - 2.0 * kPi * static_cast<double>(m);
    acc += std::exp(-d * d / (2.0 * s * s));
  }
  return norm * acc;
}

double p_gaussian(double theta, const GaussianApprox& ga) { return p_gaussian_comb(theta, ga, 0); }

PhaseDistribution p_gaussian_comb_dist(const GaussianApprox& ga, std::size_t grid_size) {
  require_grid(grid_size);
  auto theta = theta_grid(grid_size);
  std::vector<double> d(grid_size);
  for (std::size_t j = 0; j < grid_size; ++j) d[j] = p_gaussian_comb(theta[j], ga);
  return finish(std::move(theta), std::move(d), PhaseMethod::gaussian_comb);
}

PhaseDistribution p_gaussian_dist(const GaussianApprox& ga, std::size_t grid_size) {
  require_grid(grid_size);
  auto theta = theta_grid(grid_size);
  std::vector<double> d(grid_size);
  for (std::size_t j = 0; j < grid_size; ++j) d[j] = p_gaussian(theta[j], ga);
  return finish(std::move(theta), std::move(d), PhaseMethod::gaussian);
}

PhaseMoments gaussian_series_moments(const GaussianApprox& ga) {
  if (!(ga.sigma > 0.0)) throw DomainError("gaussian_series_moments requires sigma > 0");
  const long qmax = std::min<long>(static_cast<long>(std::ceil(std::sqrt(80.0) / ga.sigma)) + 1, 10'000'000L);
  std::vector<std::complex<double>> w(static_cast<std::size_t>(qmax));
  for (long q = 1; q <= qmax; ++q) {
    const double qd = static_cast<double>(q);
    w[static_cast<std::size_t>(q - 1)] = std::polar(std::exp(-0.5 * ga.sigma * ga.sigma * qd * qd), -qd * ga.theta_tilde);
  }
  return moments_from_w(w);
}

PhaseMoments heterodyne_moments(double alpha_abs, double phi_alpha, const EvolutionPoint& ep, double k,
                                BStrategy strategy) {
  const EvolutionPoint e = with_zeta(ep, k, {0.0, 0.0});
  const long qc = q_cutoff(e.mu_dot, k, alpha_abs);
  const auto c = coeffs_B(qc, alpha_abs, e.mu, k, strategy);
  return phase_moments_from_coeffs(c, e.mu_dot, k, e.zeta, phi_alpha, qc);
}

}  // namespace optocav
