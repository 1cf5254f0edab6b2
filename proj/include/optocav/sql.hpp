#pragma once

#include "optocav/params.hpp"

namespace optocav {

/// Standard-quantum-limit figures for a free-mass position/force measurement.
struct SensorLimits {
  double delta_z_sql = 0.0;  // m
  double delta_p_sql = 0.0;  // kg m/s
  double n_opt = 0.0;        // photons
  double f_sql = 0.0;        // N
  double delta_z_opt = 0.0;  // m, noise sum at n_opt
};

struct NoiseComponents {
  double dz_pf = 0.0;  // photon-counting (phase) noise, m
  double dz_rp = 0.0;  // radiation-pressure noise, m
};

/// Sensitivity of the cavity phase-readout scheme.
struct SchemeSensitivity {
  double bounces = 0.0;
  double delta_z_min = 0.0;    // m
  double snr = 0.0;            // 2 k lambda mu / delta_theta
  double snr_small_tau = 0.0;  // F tau^2 / (3 omega_m sqrt(2 hbar m omega_m))
  double f_min = 0.0;          // N
  double q_m = 0.0;
};

SensorLimits sensor_limits(const SystemParams& p, double t);

NoiseComponents noise_components(const SystemParams& p, double n_bar);

SchemeSensitivity scheme_sensitivity(const SystemParams& p, const DimensionlessParams& dp, double tau,
                                     double delta_theta, double force);

/// |q_m^2 - (4L/(ct))^2 N_opt| / q_m^2, evaluated with omega_0 = omega_c.
double qm_identity_check(const SystemParams& p, const DimensionlessParams& dp, double t);

/// Large interferometer arm: 10 kg mirror on a 1 Hz pendulum, 4 km cavity, 1064 nm light.
SystemParams interferometer_preset();

}  // namespace optocav
