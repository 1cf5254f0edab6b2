#include "figures.hpp"

#include <cmath>
#include <cstdio>
#include <numbers>

#include "optocav/errors.hpp"
#include "optocav/oracle.hpp"
#include "optocav/quadrature.hpp"
#include "optocav/sql.hpp"

namespace optocav::cli {

namespace {

constexpr double kPi = std::numbers::pi;

void require(bool ok, const std::string& msg) {
  if (!ok) throw PreconditionError(msg);
}

EvolutionPoint zero_zeta(double tau) {
  EvolutionPoint ep = evolution_point(tau, 0.0);
  ep.zeta = 0.0;
  ep.zeta_set = true;
  return ep;
}

std::vector<double> alpha_range(const FigureOverrides& o, double lo, double hi, double step) {
  lo = o.alpha_min.value_or(lo);
  hi = o.alpha_max.value_or(hi);
  step = o.alpha_step.value_or(step);
  require(lo > 0.0 && std::isfinite(hi), "alpha range must be positive");
  require(step > 0.0, "alpha step must be positive");
  require(hi >= lo, "alpha_max must be >= alpha_min");
  const long n = static_cast<long>(std::floor((hi - lo) / step * (1.0 + 1e-12))) + 1;
  std::vector<double> v(static_cast<std::size_t>(n));
  for (long i = 0; i < n; ++i) v[static_cast<std::size_t>(i)] = lo + step * static_cast<double>(i);
  return v;
}

void check_k_tau(double k, double tau) {
  require(std::isfinite(k) && k > 0.0, "k must be positive");
  require(std::isfinite(tau) && tau > 0.0, "tau must be positive");
}

std::string tag(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%g", v);
  return buf;
}

}  // namespace

PhasePoint phase_point(double alpha_abs, double phi_alpha, double k, double tau, BStrategy strategy) {
  const EvolutionPoint ep = zero_zeta(tau);
  PhasePoint p;
  p.exact = heterodyne_moments(alpha_abs, phi_alpha, ep, k, strategy);
  p.gauss = gaussian_approx(k, tau, alpha_abs, 0.0, phi_alpha);
  p.approx = gaussian_series_moments(p.gauss);
  p.wrap = std::abs(p.exact.mean) > kPi - 3.0 * p.gauss.sigma;
  return p;
}

std::string phase_diagnostics(const PhasePoint& p) {
  std::string d;
  if (p.wrap) d = "wrap";
  if (!p.gauss.in_regime) d += d.empty() ? "outside_regime" : ";outside_regime";
  return d;
}

FigureOutput figure1(const FigureOverrides& o) {
  const double k = o.k.value_or(7.0), tau = o.tau.value_or(0.01), pa = o.phi_alpha.value_or(0.0);
  check_k_tau(k, tau);
  const auto alphas = alpha_range(o, 10.0, 1000.0, 1.0);
  FigureOutput f;
  f.table.header = {"alpha_abs", "dtheta_exact", "dtheta_approx", "sigma", "theta_mean", "diagnostics"};
  for (double a : alphas) {
    const PhasePoint p = phase_point(a, pa, k, tau, o.strategy);
    f.table.add_row({a, p.exact.uncertainty, p.approx.uncertainty, p.gauss.sigma, p.exact.mean,
                     phase_diagnostics(p)});
  }
  f.plot = {"Delta theta, k=" + tag(k) + ", tau=" + tag(tau), "|alpha|", "Delta theta", 0, {1, 2, 3}, false};
  return f;
}

FigureOutput figure2(const FigureOverrides& o) {
  const double k = o.k.value_or(7.0), tau = o.tau.value_or(0.01), pa = o.phi_alpha.value_or(0.0);
  check_k_tau(k, tau);
  const auto alphas = alpha_range(o, 10.0, 1000.0, 1.0);
  FigureOutput f;
  f.table.header = {"alpha_abs", "theta_mean_exact", "theta_tilde", "theta_mean_approx", "eps2", "diagnostics"};
  for (double a : alphas) {
    const PhasePoint p = phase_point(a, pa, k, tau, o.strategy);
    f.table.add_row({a, p.exact.mean, normalize_phase(p.gauss.theta_tilde), p.approx.mean, p.gauss.eps2,
                     phase_diagnostics(p)});
  }
  f.plot = {"Mean phase, k=" + tag(k) + ", tau=" + tag(tau), "|alpha|", "mean theta", 0, {1, 2}, false};
  return f;
}

FigureOutput figure3(const FigureOverrides& o) {
  const double k = o.k.value_or(7.0), a = o.alpha.value_or(500.0), pa = o.phi_alpha.value_or(0.0);
  const double tmax = o.tau_max.value_or(o.tau.value_or(0.05));
  const long n = o.points.value_or(500);
  check_k_tau(k, tmax);
  require(a > 0.0 && std::isfinite(a), "alpha must be positive");
  require(n >= 1, "points must be >= 1");
  FigureOutput f;
  f.table.header = {"tau", "dtheta_exact", "dtheta_approx", "sigma", "theta_mean", "diagnostics"};
  for (long i = 1; i <= n; ++i) {
    const double tau = tmax * static_cast<double>(i) / static_cast<double>(n);
    const PhasePoint p = phase_point(a, pa, k, tau, o.strategy);
    f.table.add_row({tau, p.exact.uncertainty, p.approx.uncertainty, p.gauss.sigma, p.exact.mean,
                     phase_diagnostics(p)});
  }
  f.plot = {"Delta theta, k=" + tag(k) + ", |alpha|=" + tag(a), "tau", "Delta theta", 0, {1, 2, 3}, false};
  return f;
}

FigureOutput figure4(const FigureOverrides& o) {
  const double k = o.k.value_or(3.3), tau = o.tau.value_or(0.01), pa = o.phi_alpha.value_or(0.0);
  const long n = o.points.value_or(360);
  check_k_tau(k, tau);
  require(n >= 1, "points must be >= 1");
  std::vector<double> alphas = {1e2, 1e3, 1e4};
  if (o.alpha) {
    require(*o.alpha > 0.0 && std::isfinite(*o.alpha), "alpha must be positive");
    alphas = {*o.alpha};
  }
  const EvolutionPoint ep = zero_zeta(tau);
  FigureOutput f;
  f.table.header = {"phi"};
  for (double a : alphas) {
    f.table.header.push_back("dx_exact_alpha" + tag(a));
    f.table.header.push_back("dx_approx_alpha" + tag(a));
  }
  f.table.header.push_back("diagnostics");
  for (long i = 0; i < n; ++i) {
    const double phi = kPi * static_cast<double>(i) / static_cast<double>(n);
    std::vector<Cell> row = {phi};
    std::string diag;
    for (double a : alphas) {
      const auto alpha = std::polar(a, pa);
      row.emplace_back(std::sqrt(quadrature_variance(phi, alpha, ep, k).variance));
      row.emplace_back(std::sqrt(quadrature_variance_approx(phi, alpha, ep, k).first));
    }
    if (tau >= 0.1) diag = "outside_regime";
    row.emplace_back(diag);
    f.table.add_row(std::move(row));
  }
  f.plot = {"Delta X, k=" + tag(k) + ", tau=" + tag(tau), "phi", "Delta X", 0, {}, false};
  for (std::size_t c = 1; c + 1 < f.table.header.size(); ++c) f.plot.y_columns.push_back(c);
  return f;
}

FigureOutput figure5(const FigureOverrides& o) {
  const double k = o.k.value_or(3.3), pa = o.phi_alpha.value_or(0.0);
  std::vector<double> taus = {0.05, 0.02, 0.01, 0.005};
  if (o.tau) taus = {*o.tau};
  for (double t : taus) check_k_tau(k, t);
  const double lo = o.alpha_min.value_or(10.0), hi = o.alpha_max.value_or(1e7);
  const long n = o.points.value_or(121);
  require(lo > 0.0 && hi >= lo && std::isfinite(hi), "alpha range must be positive and ordered");
  require(n >= 1, "points must be >= 1");
  FigureOutput f;
  f.table.header = {"alpha_abs"};
  for (double t : taus) {
    f.table.header.push_back("dx_exact_tau" + tag(t));
    f.table.header.push_back("dx_approx_tau" + tag(t));
  }
  f.table.header.push_back("diagnostics");
  for (long i = 0; i < n; ++i) {
    const double frac = n == 1 ? 0.0 : static_cast<double>(i) / static_cast<double>(n - 1);
    const double a = lo * std::pow(hi / lo, frac);
    const auto alpha = std::polar(a, pa);
    std::vector<Cell> row = {a};
    std::string low;
    for (double t : taus) {
      const EvolutionPoint ep = zero_zeta(t);
      const double phi = phi_at_vartheta_zero(alpha, ep, k);
      const double g = quad_big_gamma(k, t, a);
      row.emplace_back(std::sqrt(quadrature_variance(phi, alpha, ep, k).variance));
      row.emplace_back(std::sqrt(min_variance_approx(a, g)));
      if (g < 1.0) low += (low.empty() ? "" : "|") + tag(t);
    }
    row.emplace_back(low.empty() ? std::string() : "gamma_lt_1:" + low);
    f.table.add_row(std::move(row));
  }
  f.plot = {"Delta X at vartheta=0, k=" + tag(k), "|alpha|", "Delta X", 0, {}, true};
  for (std::size_t c = 1; c + 1 < f.table.header.size(); ++c) f.plot.y_columns.push_back(c);
  return f;
}

FigureOutput run_figure(int n, const FigureOverrides& o) {
  switch (n) {
    case 1: return figure1(o);
    case 2: return figure2(o);
    case 3: return figure3(o);
    case 4: return figure4(o);
    case 5: return figure5(o);
    default: throw PreconditionError("figure number must be 1..5");
  }
}

const std::vector<std::string>& phase_dist_methods() {
  static const std::vector<std::string> m = {"canonical", "heterodyne", "general-beta", "gaussian",
                                             "gaussian-comb", "oracle-heterodyne", "oracle-canonical"};
  return m;
}

Table phase_dist_table(const PhaseDistRequest& r) {
  require(std::isfinite(r.k) && r.k >= 0.0, "k must be >= 0");
  require(std::isfinite(r.tau) && r.tau >= 0.0, "tau must be >= 0");
  const InitialState st{r.alpha, r.beta};
  const EvolutionPoint ep = evolution_point(r.tau, 0.0);
  PhaseDistribution d;
  if (r.method == "canonical") {
    d = p_canonical(st, ep, r.k, r.grid);
  } else if (r.method == "heterodyne") {
    d = p_q_dist(st, ep, r.k, r.grid, r.strategy);
  } else if (r.method == "general-beta") {
    d = p_q_general_beta(st, ep, r.k, r.ncut_field.value_or(general_beta_min_cutoff(st.alpha_abs())), r.grid);
  } else if (r.method == "gaussian" || r.method == "gaussian-comb") {
    require(r.beta == std::complex<double>(0.0, 0.0), "Gaussian approximation needs beta = 0");
    const auto ga = gaussian_approx(r.k, r.tau, st.alpha_abs(), 0.0, st.phi_alpha());
    d = r.method == "gaussian" ? p_gaussian_dist(ga, r.grid) : p_gaussian_comb_dist(ga, r.grid);
  } else if (r.method == "oracle-heterodyne" || r.method == "oracle-canonical") {
    require(st.alpha_abs() <= 6.0 && std::abs(r.beta) <= 6.0, "oracle methods need |alpha|, |beta| <= 6");
    const long nf = r.ncut_field.value_or(recommended_field_cutoff(st.alpha_abs()));
    const long nm =
        r.ncut_mirror.value_or(recommended_mirror_cutoff(st.alpha_abs(), std::abs(r.beta), r.k, 0.0, r.tau));
    const auto s = evolve_closed_form(build_initial(r.alpha, r.beta, nf, nm), r.tau, r.k, 0.0, 0.0);
    const auto m = r.method == "oracle-heterodyne" ? OracleMethod::heterodyne : OracleMethod::canonical;
    d = oracle_phase_dist(reduced_field_density(s), m, r.grid);
  } else {
    throw PreconditionError("unknown phase-dist method '" + r.method + "'");
  }
  Table t;
  t.header = {"theta", "density"};
  for (std::size_t j = 0; j < d.theta.size(); ++j) t.add_row({d.theta[j], d.density[j]});
  return t;
}

Table quadrature_table(const QuadratureRequest& r) {
  require(std::isfinite(r.k) && r.k >= 0.0, "k must be >= 0");
  require(std::isfinite(r.tau) && r.tau >= 0.0, "tau must be >= 0");
  require(r.grid >= 1, "grid must be >= 1");
  const EvolutionPoint ep = zero_zeta(r.tau);
  std::vector<double> phis;
  if (r.phi) {
    phis = {*r.phi};
  } else {
    for (std::size_t i = 0; i < r.grid; ++i) phis.push_back(kPi * static_cast<double>(i) / static_cast<double>(r.grid));
  }
  Table t;
  t.header = {"phi", "variance_exact", "variance_approx", "dx_exact", "dx_approx", "big_gamma", "vartheta"};
  for (double phi : phis) {
    const auto ex = quadrature_variance(phi, r.alpha, ep, r.k);
    const auto [va, qa] = quadrature_variance_approx(phi, r.alpha, ep, r.k);
    t.add_row({phi, ex.variance, va, std::sqrt(ex.variance), std::sqrt(va), qa.big_gamma, qa.vartheta});
  }
  return t;
}

Table sql_table(const SqlRequest& r) {
  SystemParams p = interferometer_preset();
  if (r.mass) p.mass = *r.mass;
  if (r.length) p.cavity_length = *r.length;
  if (r.omega_m) p.omega_m = *r.omega_m;
  if (r.wavelength) {
    require(*r.wavelength > 0.0, "wavelength must be positive");
    p.omega_c = 2.0 * kPi * p.c / *r.wavelength;
    p.omega_0 = p.omega_c;
  }
  p.validate();
  require(r.time > 0.0 && std::isfinite(r.time), "time must be positive");
  const DimensionlessParams dp = derive_dimensionless(p);
  const double tau = p.omega_m * r.time;
  const SensorLimits lim = sensor_limits(p, r.time);
  const SchemeSensitivity s = scheme_sensitivity(p, dp, tau, dp.k * tau, r.force);
  Table t;
  t.header = {"quantity", "value", "unit"};
  t.add_row({std::string("k"), dp.k, std::string("1")});
  t.add_row({std::string("tau"), tau, std::string("1")});
  t.add_row({std::string("delta_z_sql"), lim.delta_z_sql, std::string("m")});
  t.add_row({std::string("delta_p_sql"), lim.delta_p_sql, std::string("kg m/s")});
  t.add_row({std::string("n_opt"), lim.n_opt, std::string("1")});
  t.add_row({std::string("f_sql"), lim.f_sql, std::string("N")});
  t.add_row({std::string("delta_z_opt"), lim.delta_z_opt, std::string("m")});
  t.add_row({std::string("bounces"), s.bounces, std::string("1")});
  t.add_row({std::string("delta_z_min"), s.delta_z_min, std::string("m")});
  t.add_row({std::string("snr"), s.snr, std::string("1")});
  t.add_row({std::string("snr_small_tau"), s.snr_small_tau, std::string("1")});
  t.add_row({std::string("f_min"), s.f_min, std::string("N")});
  t.add_row({std::string("f_min_over_f_sql"), s.f_min / lim.f_sql, std::string("1")});
  t.add_row({std::string("q_m"), s.q_m, std::string("1")});
  t.add_row({std::string("qm_identity_residual"), qm_identity_check(p, dp, r.time), std::string("1")});
  return t;
}

}  // namespace optocav::cli
