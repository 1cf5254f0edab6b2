#pragma once

#include <complex>
#include <optional>
#include <string>
#include <vector>

#include "csv.hpp"
#include "optocav/phase.hpp"

namespace optocav::cli {

/// Per-figure overrides; unset fields take the figure's defaults.
struct FigureOverrides {
  std::optional<double> k;
  std::optional<double> tau;
  std::optional<double> alpha;  // figures 3, 4: the single amplitude
  std::optional<double> phi_alpha;
  std::optional<double> alpha_min;
  std::optional<double> alpha_max;
  std::optional<double> alpha_step;  // figures 1, 2
  std::optional<double> tau_max;     // figure 3
  std::optional<long> points;        // figures 3, 4, 5
  BStrategy strategy = BStrategy::automatic;
};

struct FigureOutput {
  Table table;
  Plot plot;
};

/// Delta theta versus |alpha|: exact series, Gaussian-coefficient series, sigma.
FigureOutput figure1(const FigureOverrides& o);
/// Mean phase versus |alpha|, exact and theta~.
FigureOutput figure2(const FigureOverrides& o);
/// Delta theta versus tau at fixed |alpha|.
FigureOutput figure3(const FigureOverrides& o);
/// Delta X versus local-oscillator phase for several |alpha|.
FigureOutput figure4(const FigureOverrides& o);
/// Delta X at vartheta = 0 versus |alpha| for several tau.
FigureOutput figure5(const FigureOverrides& o);

FigureOutput run_figure(int n, const FigureOverrides& o);

/// Rows of a figure-1 style scan at one |alpha|; shared with the sweep.
struct PhasePoint {
  PhaseMoments exact;
  PhaseMoments approx;
  GaussianApprox gauss;
  bool wrap = false;  // |mean| > pi - 3 sigma
};
PhasePoint phase_point(double alpha_abs, double phi_alpha, double k, double tau, BStrategy strategy);

/// "wrap", "outside_regime" or both joined by ';'.
std::string phase_diagnostics(const PhasePoint& p);

struct PhaseDistRequest {
  std::string method = "heterodyne";
  std::complex<double> alpha{2.0, 0.0};
  std::complex<double> beta{0.0, 0.0};
  double k = 0.5;
  double tau = 0.7;
  std::size_t grid = 4096;
  std::optional<long> ncut_field;
  std::optional<long> ncut_mirror;
  BStrategy strategy = BStrategy::automatic;
};
/// Methods: canonical, heterodyne, general-beta, gaussian, gaussian-comb,
/// oracle-heterodyne, oracle-canonical.
Table phase_dist_table(const PhaseDistRequest& r);
const std::vector<std::string>& phase_dist_methods();

struct QuadratureRequest {
  std::complex<double> alpha{1000.0, 0.0};
  double k = 3.3;
  double tau = 0.01;
  std::optional<double> phi;
  std::size_t grid = 360;
};
Table quadrature_table(const QuadratureRequest& r);

struct SqlRequest {
  std::optional<double> mass;
  std::optional<double> length;
  std::optional<double> omega_m;
  std::optional<double> wavelength;
  double time = 1e-3;  // s
  double force = 0.0;  // N
};
/// quantity,value,unit rows for the interferometer preset with overrides.
Table sql_table(const SqlRequest& r);

}  // namespace optocav::cli
