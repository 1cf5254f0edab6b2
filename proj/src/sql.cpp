#include "optocav/sql.hpp"

#include <cmath>
#include <numbers>

#include "optocav/errors.hpp"

namespace optocav {

SensorLimits sensor_limits(const SystemParams& p, double t) {
  p.validate();
  if (!(t > 0.0)) throw DomainError("measurement time must be positive");
  SensorLimits s;
  s.delta_z_sql = std::sqrt(p.hbar / (2.0 * p.mass * p.omega_m));
  s.delta_p_sql = std::sqrt(p.hbar * p.mass * p.omega_m / 2.0);
  s.n_opt = p.mass * p.omega_m * p.c * p.c / (8.0 * p.hbar * p.omega_0 * p.omega_0);
  s.f_sql = s.delta_p_sql / t;
  s.delta_z_opt = std::numbers::sqrt2 * s.delta_z_sql;
  return s;
}

NoiseComponents noise_components(const SystemParams& p, double n_bar) {
  p.validate();
  if (!(n_bar > 0.0)) throw DomainError("photon number must be positive");
  NoiseComponents n;
  const double rn = std::sqrt(n_bar);
  n.dz_pf = p.c / (4.0 * p.omega_0 * rn);
  n.dz_rp = 2.0 * p.hbar * p.omega_0 * rn / (p.mass * p.c * p.omega_m);
  return n;
}

SchemeSensitivity scheme_sensitivity(const SystemParams& p, const DimensionlessParams& dp, double tau,
                                     double delta_theta, double force) {
  p.validate();
  if (!(tau > 0.0)) throw DomainError("tau must be positive");
  if (!(delta_theta > 0.0)) throw DomainError("delta_theta must be positive");
  SchemeSensitivity s;
  s.bounces = tau * p.c / (2.0 * p.omega_m * p.cavity_length);
  s.delta_z_min = p.omega_m * p.cavity_length / (p.omega_c * tau) * delta_theta;
  const double root = std::sqrt(2.0 * p.hbar * p.mass * p.omega_m);
  const double lambda = force / root / p.omega_m;
  const EvolutionPoint ep = evolution_point(tau, lambda);
  s.snr = 2.0 * dp.k * ep.lambda * ep.mu / delta_theta;
  s.snr_small_tau = force * tau * tau / (3.0 * p.omega_m * root);
  const double t = tau / p.omega_m;
  s.f_min = std::sqrt(18.0 * p.hbar * p.mass / p.omega_m) / (t * t);
  s.q_m = 1.0 / (dp.k * tau);
  return s;
}

double qm_identity_check(const SystemParams& p, const DimensionlessParams& dp, double t) {
  if (!(t > 0.0)) throw DomainError("measurement time must be positive");
  SystemParams q = p;
  q.omega_0 = p.omega_c;
  const double tau = p.omega_m * t;
  const double qm = 1.0 / (dp.k * tau);
  const double ratio = 4.0 * p.cavity_length / (p.c * t);
  const double rhs = ratio * ratio * sensor_limits(q, t).n_opt;
  return std::abs(qm * qm - rhs) / (qm * qm);
}

SystemParams interferometer_preset() {
  SystemParams p;
  p.mass = 10.0;
  p.cavity_length = 4000.0;
  p.omega_m = 2.0 * std::numbers::pi;
  p.omega_c = 2.0 * std::numbers::pi * si::c / 1.064e-6;
  p.omega_0 = p.omega_c;
  return p;
}

}  // namespace optocav
