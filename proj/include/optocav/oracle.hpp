#pragma once

#include <Eigen/Dense>
#include <complex>

#include "optocav/params.hpp"
#include "optocav/phase.hpp"
#include "optocav/quadrature.hpp"

namespace optocav {

/// Field x mirror amplitudes on a truncated Fock basis; row = photon number.
struct TruncatedState {
  long n_cut_field = 0;
  long n_cut_mirror = 0;
  Eigen::MatrixXcd amplitudes;
  double truncation_loss = 0.0;  // 1 - norm^2 at preparation
  bool below_recommended_cutoff = false;
};

struct FieldDensityMatrix {
  Eigen::MatrixXcd entries;
  double truncation_loss = 0.0;
  long dim() const { return static_cast<long>(entries.rows()); }
};

long recommended_field_cutoff(double alpha_abs);

/// Photon number beyond which the Poisson(|alpha|^2) tail is below 1e-20.
long effective_max_photon(double alpha_abs);

/// Mirror cutoff that covers every |gamma_n| reached up to tau for the
/// photon numbers that carry weight.
long recommended_mirror_cutoff(double alpha_abs, double beta_abs, double k, double lambda, double tau);

TruncatedState build_initial(std::complex<double> alpha, std::complex<double> beta, long n_cut_field,
                             long n_cut_mirror);

/// Factorised evolution operator applied block by block (lab frame).
TruncatedState evolve_closed_form(const TruncatedState& s, double tau, double k, double r, double lambda);

/// Exact exponentiation of the truncated Hamiltonian (in units of hbar omega_m, time tau).
TruncatedState evolve_matrix_exp(const TruncatedState& s, double k, double r, double lambda, double tau);

/// Same in physical units; sampled (time-dependent) drives are rejected.
TruncatedState evolve_matrix_exp(const TruncatedState& s, const SystemParams& p, const DriveForce& drive,
                                 double t);

FieldDensityMatrix reduced_field_density(const TruncatedState& s);
Eigen::MatrixXcd reduced_mirror_density(const TruncatedState& s);

/// Removes the free field rotation exp(-i r n tau).
FieldDensityMatrix to_rotating_frame(const FieldDensityMatrix& rho, double r, double tau);

/// Tr(rho^2) / (Tr rho)^2.
double purity(const Eigen::MatrixXcd& rho);
/// |<a|b>|^2 / (|a|^2 |b|^2).
double fidelity(const TruncatedState& a, const TruncatedState& b);
double trace_distance(const Eigen::MatrixXcd& a, const Eigen::MatrixXcd& b);
double state_norm(const TruncatedState& s);

/// Coherent-state density |beta><beta| on dim mirror levels.
Eigen::MatrixXcd coherent_projector(std::complex<double> beta, long dim);

enum class OracleMethod { canonical, heterodyne };

/// Phase density by the direct double sum over rho entries.
PhaseDistribution oracle_phase_dist(const FieldDensityMatrix& rho, OracleMethod method,
                                    std::size_t grid_size = 4096);

/// <a>, <a^2>, <a^dag a> by ladder traces; variance assembled as for quadrature_variance.
QuadratureResult oracle_quadrature(const FieldDensityMatrix& rho, double phi);

/// Tr(rho a^dag a).
double oracle_photon_number(const FieldDensityMatrix& rho);

}  // namespace optocav
