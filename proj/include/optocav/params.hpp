#pragma once

#include <complex>
#include <optional>
#include <utility>
#include <vector>

namespace optocav {

namespace si {
inline constexpr double hbar = 1.054571817e-34;  // J s
inline constexpr double c = 299792458.0;         // m/s
}  // namespace si

/// Physical parameters of the cavity + mirror system.
struct SystemParams {
  double mass = 1.0;           // kg
  double cavity_length = 1.0;  // m
  double omega_c = 1.0;        // rad/s, cavity mode
  double omega_m = 1.0;        // rad/s, mirror
  double omega_0 = 1.0;        // rad/s, probe beam used by the SQL formulas
  double hbar = si::hbar;
  double c = si::c;
  // When set, omega_c must equal pi*c*n/L to 1 part in 1e6.
  std::optional<long> mode_index;

  /// Throws DomainError on a nonpositive field or an inconsistent mode index.
  void validate() const;
};

struct DimensionlessParams {
  double k = 0.0;  // g / omega_m
  double r = 0.0;  // omega_c / omega_m
  double g = 0.0;  // rad/s
};

DimensionlessParams derive_dimensionless(const SystemParams& p);

/// External force on the mirror.
class DriveForce {
 public:
  enum class Kind { none, constant, sampled };

  static DriveForce none() { return DriveForce(); }
  static DriveForce constant(double force_newton);
  /// (t, F(t)) pairs; times strictly increasing and starting at 0.
  static DriveForce sampled(std::vector<std::pair<double, double>> table);

  Kind kind() const { return kind_; }
  double constant_force() const { return force_; }
  const std::vector<std::pair<double, double>>& table() const { return table_; }

  /// Integral of F over [0, t], trapezoid rule on the sampled grid.
  double integral(double t) const;
  double value_at(double t) const;

 private:
  Kind kind_ = Kind::none;
  double force_ = 0.0;
  std::vector<std::pair<double, double>> table_;
};

/// Time-dependent scalars at scaled time tau = omega_m t.
struct EvolutionPoint {
  double tau = 0.0;
  double lambda = 0.0;
  double mu = 0.0;      // tau - sin tau
  double mu_dot = 0.0;  // 1 - cos tau
  std::complex<double> eta{0.0, 0.0};  // 1 - exp(-i tau)
  double zeta = 0.0;
  bool zeta_set = false;
};

/// mu, mu_dot, eta at tau with lambda given in scaled units. Throws on tau < 0.
EvolutionPoint evolution_point(double tau, double lambda = 0.0);

EvolutionPoint time_functions(double tau, const DriveForce& drive, const SystemParams& p);

/// zeta = 2 k lambda mu + k Im(beta eta); also stored into ep.
double phase_zeta(EvolutionPoint& ep, double k, std::complex<double> beta);

/// Mirror coherent amplitude correlated with field Fock state n.
std::complex<double> gamma_n(long n, const EvolutionPoint& ep, double k, std::complex<double> beta);

/// <gamma_{n2} | gamma_n>.
std::complex<double> overlap_gamma(long n, long n2, const EvolutionPoint& ep, double k,
                                   std::complex<double> beta);

/// Logarithm of overlap_gamma; stays finite when the overlap underflows.
std::complex<double> log_overlap_gamma(long n, long n2, const EvolutionPoint& ep, double k,
                                       std::complex<double> beta);

struct InitialState {
  std::complex<double> alpha{0.0, 0.0};
  std::complex<double> beta{0.0, 0.0};

  double alpha_abs() const { return std::abs(alpha); }
  double phi_alpha() const { return std::arg(alpha); }
};

}  // namespace optocav
