#include "checks.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "optocav/errors.hpp"
#include "optocav/oracle.hpp"
#include "optocav/phase.hpp"
#include "optocav/quadrature.hpp"
#include "optocav/specfun.hpp"

namespace optocav::cli {

namespace {

using cd = std::complex<double>;

CheckResult make(std::string name, double metric, double tol) {
  return {std::move(name), metric, tol, std::isfinite(metric) && metric <= tol};
}

double sup_diff(const PhaseDistribution& a, const PhaseDistribution& b) {
  double m = 0.0;
  for (std::size_t j = 0; j < a.density.size(); ++j) m = std::max(m, std::abs(a.density[j] - b.density[j]));
  return m;
}

TruncatedState evolved(cd alpha, cd beta, double k, double r, double lambda, double tau) {
  const long nf = recommended_field_cutoff(std::abs(alpha));
  const long nm = recommended_mirror_cutoff(std::abs(alpha), std::abs(beta), k, lambda, tau);
  return evolve_closed_form(build_initial(alpha, beta, nf, nm), tau, k, r, lambda);
}

}  // namespace

std::vector<CheckResult> check_small_alpha() {
  const double k = 0.5, tau = 0.7, phi = 0.3;
  const cd alpha(2.0, 0.0);
  const std::size_t grid = 4096;
  const InitialState st{alpha, {0.0, 0.0}};
  const EvolutionPoint ep = evolution_point(tau, 0.0);
  const auto rho = reduced_field_density(evolved(alpha, 0.0, k, 0.0, 0.0, tau));

  const auto series = p_q_dist(st, ep, k, grid);
  const auto general = p_q_general_beta(st, ep, k, general_beta_min_cutoff(2.0), grid);
  const auto oracle = oracle_phase_dist(rho, OracleMethod::heterodyne, grid);
  const auto can = p_canonical(st, ep, k, grid);
  const auto can_oracle = oracle_phase_dist(rho, OracleMethod::canonical, grid);

  std::vector<CheckResult> out;
  out.push_back(make("pq_series_vs_general_beta", sup_diff(series, general), 1e-8));
  out.push_back(make("pq_series_vs_oracle", sup_diff(series, oracle), 1e-8));
  out.push_back(make("pq_general_beta_vs_oracle", sup_diff(general, oracle), 1e-8));
  out.push_back(make("canonical_vs_oracle", sup_diff(can, can_oracle), 1e-8));
  out.push_back(make("pq_series_norm", std::abs(series.integral() - 1.0), 1e-6));
  out.push_back(make("pq_general_beta_norm", std::abs(general.integral() - 1.0), 1e-6));
  out.push_back(make("pq_oracle_norm", std::abs(oracle.integral() - 1.0), 1e-6));

  double pois = 0.0;
  for (long n = 0; n < rho.dim(); ++n)
    pois = std::max(pois, std::abs(rho.entries(n, n).real() - std::exp(log_poisson(n, 4.0))));
  out.push_back(make("photon_statistics_poisson", pois, 1e-10));
  out.push_back(make("photon_number", std::abs(oracle_photon_number(rho) - 4.0), 1e-10));

  const auto q_or = oracle_quadrature(rho, phi);
  out.push_back(make("expect_a", std::abs(expect_a(alpha, ep, k) - q_or.mean_a), 1e-10));
  out.push_back(make("expect_a2", std::abs(expect_a2(alpha, ep, k) - q_or.mean_a2), 1e-10));
  out.push_back(make("quadrature_variance", std::abs(quadrature_variance(phi, alpha, ep, k).variance - q_or.variance), 1e-9));
  return out;
}

std::vector<CheckResult> check_disentangle() {
  const double k = 0.2, tau = 2.0 * std::numbers::pi;
  std::vector<CheckResult> out;
  const std::pair<const char*, std::pair<cd, cd>> cases[] = {
      {"purity_alpha2_beta0", {cd(2.0, 0.0), cd(0.0, 0.0)}},
      {"purity_alpha1.5_beta0.5+0.3i", {cd(1.5, 0.0), cd(0.5, 0.3)}},
  };
  for (const auto& [name, ab] : cases) {
    const auto s = evolved(ab.first, ab.second, k, 0.0, 0.0, tau);
    out.push_back(make(name, std::abs(1.0 - purity(reduced_field_density(s).entries)), 1e-9));
  }
  return out;
}

std::vector<CheckResult> check_closed_form_vs_expm() {
  const double k = 0.5, r = 3.0, tau = 0.7;
  const cd alpha(2.0, 0.0);
  std::vector<CheckResult> out;
  for (double lambda : {0.0, 0.1}) {
    const long nf = recommended_field_cutoff(2.0);
    const long nm = recommended_mirror_cutoff(2.0, 0.0, k, lambda, tau);
    const auto init = build_initial(alpha, 0.0, nf, nm);
    const auto a = evolve_closed_form(init, tau, k, r, lambda);
    const auto b = evolve_matrix_exp(init, k, r, lambda, tau);
    out.push_back(make(lambda == 0.0 ? "fidelity_lambda0" : "fidelity_lambda0.1", 1.0 - fidelity(a, b), 1e-8));
  }
  return out;
}

const std::vector<std::string>& oracle_presets() {
  static const std::vector<std::string> p = {"small-alpha", "disentangle", "closed-form-vs-expm", "all"};
  return p;
}

std::vector<CheckResult> run_preset(const std::string& preset) {
  if (preset == "small-alpha") return check_small_alpha();
  if (preset == "disentangle") return check_disentangle();
  if (preset == "closed-form-vs-expm") return check_closed_form_vs_expm();
  if (preset == "all") {
    auto r = check_small_alpha();
    for (auto& c : check_disentangle()) r.push_back(c);
    for (auto& c : check_closed_form_vs_expm()) r.push_back(c);
    return r;
  }
  throw PreconditionError("unknown oracle preset '" + preset + "'");
}

Table checks_table(const std::vector<CheckResult>& r) {
  Table t;
  t.header = {"check", "metric", "tolerance", "result"};
  for (const auto& c : r) t.add_row({c.name, c.metric, c.tolerance, std::string(c.pass ? "pass" : "fail")});
  return t;
}

}  // namespace optocav::cli
