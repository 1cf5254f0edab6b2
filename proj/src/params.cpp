#include "optocav/params.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "optocav/errors.hpp"

namespace optocav {

namespace {

void require_positive(double v, const char* name) {
  if (!(v > 0.0) || !std::isfinite(v))
    throw DomainError(std::string("SystemParams.") + name + " must be positive and finite");
}

}  // namespace

void SystemParams::validate() const {
  require_positive(mass, "mass");
  require_positive(cavity_length, "cavity_length");
  require_positive(omega_c, "omega_c");
  require_positive(omega_m, "omega_m");
  require_positive(omega_0, "omega_0");
  require_positive(hbar, "hbar");
  require_positive(c, "c");
  if (mode_index) {
    if (*mode_index <= 0) throw DomainError("mode_index must be a positive integer");
    const double expected = std::numbers::pi * c * static_cast<double>(*mode_index) / cavity_length;
    if (std::abs(omega_c - expected) > 1e-6 * expected)
      throw DomainError("omega_c inconsistent with mode_index: expected " + std::to_string(expected));
  }
}

DimensionlessParams derive_dimensionless(const SystemParams& p) {
  p.validate();
  DimensionlessParams d;
  d.g = (p.omega_c / p.cavity_length) * std::sqrt(p.hbar / (2.0 * p.mass * p.omega_m));
  d.k = d.g / p.omega_m;
  d.r = p.omega_c / p.omega_m;
  return d;
}

DriveForce DriveForce::constant(double force_newton) {
  if (!std::isfinite(force_newton)) throw DomainError("constant force must be finite");
  DriveForce d;
  d.kind_ = Kind::constant;
  d.force_ = force_newton;
  return d;
}

DriveForce DriveForce::sampled(std::vector<std::pair<double, double>> table) {
  if (table.empty()) throw DomainError("sampled force table is empty");
  if (table.front().first != 0.0) throw DomainError("sampled force table must start at t = 0");
  for (std::size_t i = 0; i < table.size(); ++i) {
    if (!std::isfinite(table[i].first) || !std::isfinite(table[i].second))
      throw DomainError("sampled force table has a non-finite entry");
    if (i > 0 && !(table[i].first > table[i - 1].first))
      throw DomainError("sampled force times must be strictly increasing");
  }
  DriveForce d;
  d.kind_ = Kind::sampled;
  d.table_ = std::move(table);
  return d;
}

double DriveForce::value_at(double t) const {
  switch (kind_) {
    case Kind::none:
      return 0.0;
    case Kind::constant:
      return force_;
    case Kind::sampled:
      break;
  }
  if (t > table_.back().first) throw DomainError("time beyond the sampled force table");
  if (table_.size() == 1) return table_.front().second;
  std::size_t i = 1;
  while (table_[i].first < t) ++i;
  const auto [t0, f0] = table_[i - 1];
  const auto [t1, f1] = table_[i];
  return f0 + (f1 - f0) * (t - t0) / (t1 - t0);
}

double DriveForce::integral(double t) const {
  if (t < 0.0) throw DomainError("negative integration time");
  switch (kind_) {
    case Kind::none:
      return 0.0;
    case Kind::constant:
      return force_ * t;
    case Kind::sampled:
      break;
  }
  if (t > table_.back().first) throw DomainError("time beyond the sampled force table");
  double acc = 0.0;
  for (std::size_t i = 1; i < table_.size(); ++i) {
    const auto [t0, f0] = table_[i - 1];
    auto [t1, f1] = table_[i];
    if (t0 >= t) break;
    if (t1 > t) {
      f1 = f0 + (f1 - f0) * (t - t0) / (t1 - t0);
      t1 = t;
    }
    acc += 0.5 * (f0 + f1) * (t1 - t0);
  }
  return acc;
}

EvolutionPoint evolution_point(double tau, double lambda) {
  if (!(tau >= 0.0) || !std::isfinite(tau)) throw DomainError("tau must be finite and >= 0");
  EvolutionPoint ep;
  ep.tau = tau;
  ep.lambda = lambda;
  if (tau < 1.0) {
    // tau - sin tau loses log2(6/tau^2) bits; sum the Taylor series instead.
    const double t2 = tau * tau;
    double term = tau * t2 / 6.0, sum = 0.0;
    for (int j = 0; std::abs(term) > 1e-18 * std::abs(sum); ++j) {
      sum += term;
      term *= -t2 / ((2.0 * j + 4.0) * (2.0 * j + 5.0));
    }
    ep.mu = sum;
  } else {
    ep.mu = tau - std::sin(tau);
  }
  const double s = std::sin(0.5 * tau);
  ep.mu_dot = 2.0 * s * s;
  ep.eta = {ep.mu_dot, std::sin(tau)};
  return ep;
}

EvolutionPoint time_functions(double tau, const DriveForce& drive, const SystemParams& p) {
  if (tau < 0.0) throw DomainError("tau must be >= 0");
  p.validate();
  const double scale = std::sqrt(2.0 * p.mass * p.omega_m * p.hbar);
  double lambda = 0.0;
  if (drive.kind() == DriveForce::Kind::constant) {
    lambda = drive.constant_force() / scale / p.omega_m;
  } else if (drive.kind() == DriveForce::Kind::sampled) {
    if (tau == 0.0)
      lambda = drive.value_at(0.0) / scale / p.omega_m;
    else
      lambda = drive.integral(tau / p.omega_m) / scale / tau;
  }
  return evolution_point(tau, lambda);
}

double phase_zeta(EvolutionPoint& ep, double k, std::complex<double> beta) {
  ep.zeta = 2.0 * k * ep.lambda * ep.mu + k * std::imag(beta * ep.eta);
  ep.zeta_set = true;
  return ep.zeta;
}

std::complex<double> gamma_n(long n, const EvolutionPoint& ep, double k, std::complex<double> beta) {
  const std::complex<double> rot = std::polar(1.0, -ep.tau);
  return beta * rot + (k * static_cast<double>(n) + ep.lambda) * ep.eta;
}

std::complex<double> log_overlap_gamma(long n, long n2, const EvolutionPoint& ep, double k,
                                       std::complex<double> beta) {
  if (n == n2) return {0.0, 0.0};
  const auto g1 = gamma_n(n, ep, k, beta);
  const auto g2 = gamma_n(n2, ep, k, beta);
  // conj(g2) g1 - |g1|^2/2 - |g2|^2/2 = -|g1 - g2|^2/2 + i Im(conj(g2) g1)
  const double dist2 = std::norm(g1 - g2);
  return {-0.5 * dist2, std::imag(std::conj(g2) * g1)};
}

std::complex<double> overlap_gamma(long n, long n2, const EvolutionPoint& ep, double k,
                                   std::complex<double> beta) {
  if (n == n2) return {1.0, 0.0};
  if (beta == std::complex<double>(0.0, 0.0)) {
    const double d = static_cast<double>(n - n2);
    return {std::exp(-ep.mu_dot * k * k * d * d), 0.0};
  }
  return std::exp(log_overlap_gamma(n, n2, ep, k, beta));
}

}  // namespace optocav
