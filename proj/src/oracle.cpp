#include "optocav/oracle.hpp"

#include <Eigen/Eigenvalues>
#include <cmath>
#include <numbers>
#include <string>

#include "optocav/errors.hpp"
#include "optocav/specfun.hpp"

namespace optocav {

namespace {

using cd = std::complex<double>;

Eigen::VectorXcd coherent_vector(cd amp, long cut) {
  Eigen::VectorXcd v = Eigen::VectorXcd::Zero(cut + 1);
  const double a = std::abs(amp);
  if (a == 0.0) {
    v(0) = 1.0;
    return v;
  }
  const double la = std::log(a), ph = std::arg(amp);
  for (long n = 0; n <= cut; ++n) {
    const double nd = static_cast<double>(n);
    v(n) = std::polar(std::exp(-0.5 * a * a + nd * la - 0.5 * std::lgamma(nd + 1.0)), nd * ph);
  }
  return v;
}

void check_cutoffs(long f, long m) {
  if (f < 0 || m < 0) throw PreconditionError("Fock cutoffs must be >= 0");
}

}  // namespace

long recommended_field_cutoff(double alpha_abs) {
  return static_cast<long>(std::ceil(alpha_abs * alpha_abs + 10.0 * alpha_abs + 20.0));
}

long effective_max_photon(double alpha_abs) {
  const double l = alpha_abs * alpha_abs;
  const double thresh = std::log(1e-20);
  long n = static_cast<long>(std::ceil(l));
  while (log_poisson(n, l) > thresh) ++n;
  return n;
}

long recommended_mirror_cutoff(double alpha_abs, double beta_abs, double k, double lambda, double tau) {
  const double eta_max = 2.0 * std::sin(0.5 * std::min(tau, std::numbers::pi));
  const double n_eff = static_cast<double>(effective_max_photon(alpha_abs));
  const double g = beta_abs + (std::abs(k) * n_eff + std::abs(lambda)) * eta_max;
  return static_cast<long>(std::ceil(g * g + 10.0 * g + 20.0));
}

TruncatedState build_initial(cd alpha, cd beta, long n_cut_field, long n_cut_mirror) {
  check_cutoffs(n_cut_field, n_cut_mirror);
  TruncatedState s;
  s.n_cut_field = n_cut_field;
  s.n_cut_mirror = n_cut_mirror;
  const Eigen::VectorXcd f = coherent_vector(alpha, n_cut_field);
  const Eigen::VectorXcd m = coherent_vector(beta, n_cut_mirror);
  s.amplitudes = f * m.transpose();
  s.truncation_loss = std::max(0.0, 1.0 - f.squaredNorm() * m.squaredNorm());
  s.below_recommended_cutoff = n_cut_field < recommended_field_cutoff(std::abs(alpha)) ||
                               n_cut_mirror < recommended_field_cutoff(std::abs(beta));
  return s;
}

TruncatedState evolve_closed_form(const TruncatedState& s, double tau, double k, double r, double lambda) {
  const EvolutionPoint ep = evolution_point(tau, 0.0);
  const long nm = s.n_cut_mirror + 1;
  // i (eta b^dag - conj(eta) b) = |eta| W (b + b^dag) W^dag with W = diag(e^{i m (arg eta + pi/2)}),
  // so one real tridiagonal eigendecomposition serves every block.
  Eigen::VectorXd v_diag = Eigen::VectorXd::Zero(nm), v_sub(std::max<long>(nm - 1, 0));
  for (long m = 0; m + 1 < nm; ++m) v_sub(m) = std::sqrt(static_cast<double>(m + 1));
  Eigen::MatrixXd v = Eigen::MatrixXd::Ones(1, 1);
  Eigen::VectorXd lam = Eigen::VectorXd::Zero(1);
  if (nm > 1) {
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es;
    es.computeFromTridiagonal(v_diag, v_sub, Eigen::ComputeEigenvectors);
    v = es.eigenvectors();
    lam = std::abs(ep.eta) * es.eigenvalues();
  }
  Eigen::VectorXcd w(nm);
  const double w_arg = std::arg(ep.eta) + 0.5 * std::numbers::pi;
  for (long m = 0; m < nm; ++m) w(m) = std::polar(1.0, w_arg * static_cast<double>(m));

  Eigen::VectorXcd rot(nm);
  for (long m = 0; m < nm; ++m) rot(m) = std::polar(1.0, -tau * static_cast<double>(m));

  TruncatedState out = s;
  Eigen::VectorXcd col(nm), tmp(nm);
  for (long n = 0; n <= s.n_cut_field; ++n) {
    const double x = k * static_cast<double>(n) + lambda;
    col = s.amplitudes.row(n).transpose().cwiseProduct(rot).cwiseProduct(w.conjugate());
    // exp(x (eta b^dag - conj(eta) b)) = W V exp(-i x Lambda) V^T W^dag
    tmp = v.transpose() * col;
    for (long j = 0; j < nm; ++j) tmp(j) *= std::polar(1.0, -x * lam(j));
    col = (v * tmp).cwiseProduct(w);
    const double phase = ep.mu * x * x - r * static_cast<double>(n) * tau;
    out.amplitudes.row(n) = (col * std::polar(1.0, phase)).transpose();
  }
  return out;
}

TruncatedState evolve_matrix_exp(const TruncatedState& s, double k, double r, double lambda, double tau) {
  if (!(tau >= 0.0)) throw DomainError("tau must be >= 0");
  const long nm = s.n_cut_mirror + 1;
  TruncatedState out = s;
  if (tau == 0.0) return out;
  // H conserves a^dag a, so H = sum_n |n><n| (x) H_n with H_n real tridiagonal:
  // H_n = r n + b^dag b - (k n + lambda)(b + b^dag).
  Eigen::VectorXd diag(nm), sub(std::max<long>(nm - 1, 0));
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es;
  Eigen::VectorXcd tmp(nm);
  for (long n = 0; n <= s.n_cut_field; ++n) {
    const double x = k * static_cast<double>(n) + lambda;
    for (long m = 0; m < nm; ++m) diag(m) = r * static_cast<double>(n) + static_cast<double>(m);
    for (long m = 0; m + 1 < nm; ++m) sub(m) = -x * std::sqrt(static_cast<double>(m + 1));
    if (nm == 1) {
      out.amplitudes(n, 0) = s.amplitudes(n, 0) * std::polar(1.0, -diag(0) * tau);
      continue;
    }
    es.computeFromTridiagonal(diag, sub, Eigen::ComputeEigenvectors);
    const Eigen::MatrixXd& v = es.eigenvectors();
    tmp = v.transpose().cast<cd>() * s.amplitudes.row(n).transpose();
    for (long j = 0; j < nm; ++j) tmp(j) *= std::polar(1.0, -es.eigenvalues()(j) * tau);
    out.amplitudes.row(n) = (v.cast<cd>() * tmp).transpose();
  }
  return out;
}

TruncatedState evolve_matrix_exp(const TruncatedState& s, const SystemParams& p, const DriveForce& drive,
                                 double t) {
  if (drive.kind() == DriveForce::Kind::sampled)
    throw UnsupportedInput("matrix-exponential oracle handles zero or constant force only");
  if (!(t >= 0.0)) throw DomainError("time must be >= 0");
  const DimensionlessParams dp = derive_dimensionless(p);
  const double tau = p.omega_m * t;
  const EvolutionPoint ep = time_functions(tau, drive, p);
  return evolve_matrix_exp(s, dp.k, dp.r, ep.lambda, tau);
}

FieldDensityMatrix reduced_field_density(const TruncatedState& s) {
  FieldDensityMatrix rho;
  rho.entries = s.amplitudes * s.amplitudes.adjoint();
  rho.truncation_loss = s.truncation_loss;
  return rho;
}

Eigen::MatrixXcd reduced_mirror_density(const TruncatedState& s) {
  return s.amplitudes.transpose() * s.amplitudes.conjugate();
}

FieldDensityMatrix to_rotating_frame(const FieldDensityMatrix& rho, double r, double tau) {
  FieldDensityMatrix out = rho;
  for (long n = 0; n < rho.dim(); ++n)
    for (long m = 0; m < rho.dim(); ++m)
      out.entries(n, m) *= std::polar(1.0, r * tau * static_cast<double>(n - m));
  return out;
}

double purity(const Eigen::MatrixXcd& rho) {
  const double tr = rho.trace().real();
  return (rho * rho).trace().real() / (tr * tr);
}

double state_norm(const TruncatedState& s) { return s.amplitudes.norm(); }

double fidelity(const TruncatedState& a, const TruncatedState& b) {
  if (a.amplitudes.rows() != b.amplitudes.rows() || a.amplitudes.cols() != b.amplitudes.cols())
    throw PreconditionError("fidelity needs states on the same truncation");
  const cd ov = (a.amplitudes.conjugate().cwiseProduct(b.amplitudes)).sum();
  return std::norm(ov) / (a.amplitudes.squaredNorm() * b.amplitudes.squaredNorm());
}

double trace_distance(const Eigen::MatrixXcd& a, const Eigen::MatrixXcd& b) {
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(a - b, Eigen::EigenvaluesOnly);
  return 0.5 * es.eigenvalues().cwiseAbs().sum();
}

Eigen::MatrixXcd coherent_projector(cd beta, long dim) {
  const Eigen::VectorXcd v = coherent_vector(beta, dim - 1);
  return v * v.adjoint();
}

PhaseDistribution oracle_phase_dist(const FieldDensityMatrix& rho, OracleMethod method, std::size_t grid_size) {
  const long d = rho.dim();
  Eigen::MatrixXcd weighted = rho.entries;
  if (method == OracleMethod::heterodyne) {
    for (long n = 0; n < d; ++n)
      for (long m = 0; m < d; ++m) {
        const double nd = static_cast<double>(n), md = static_cast<double>(m);
        weighted(n, m) *= std::exp(std::lgamma(0.5 * (nd + md) + 1.0) -
                                   0.5 * (std::lgamma(nd + 1.0) + std::lgamma(md + 1.0)));
      }
  }
  auto theta = theta_grid(grid_size);
  std::vector<double> dens(grid_size);
  Eigen::VectorXcd u(d);
  for (std::size_t j = 0; j < grid_size; ++j) {
    for (long n = 0; n < d; ++n) u(n) = std::polar(1.0, -static_cast<double>(n) * theta[j]);
    // sum_{n,m} rho_{nm} e^{-i (n-m) theta}
    const cd s = u.transpose() * weighted * u.conjugate();
    dens[j] = s.real() / (2.0 * std::numbers::pi);
  }
  return make_distribution(std::move(theta), std::move(dens), PhaseMethod::oracle);
}

double oracle_photon_number(const FieldDensityMatrix& rho) {
  double s = 0.0;
  for (long n = 0; n < rho.dim(); ++n) s += static_cast<double>(n) * rho.entries(n, n).real();
  return s;
}

QuadratureResult oracle_quadrature(const FieldDensityMatrix& rho, double phi) {
  const long d = rho.dim();
  if (d < 3) throw PreconditionError("oracle_quadrature needs at least 3 Fock levels");
  cd a1(0.0, 0.0), a2(0.0, 0.0);
  for (long m = 1; m < d; ++m) a1 += rho.entries(m, m - 1) * std::sqrt(static_cast<double>(m));
  for (long m = 2; m < d; ++m)
    a2 += rho.entries(m, m - 2) * std::sqrt(static_cast<double>(m) * static_cast<double>(m - 1));
  const double nbar = oracle_photon_number(rho);
  QuadratureResult r;
  r.phi = phi;
  r.mean_a = a1;
  r.mean_a2 = a2;
  r.mean_x = 2.0 * (a1 * std::polar(1.0, -phi)).real();
  const double x2 = 2.0 * (a2 * std::polar(1.0, -2.0 * phi)).real() + 2.0 * nbar + 1.0;
  r.variance = x2 - r.mean_x * r.mean_x;
  return r;
}

}  // namespace optocav
