#include "sweep.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <exception>
#include <map>
#include <thread>

#include "optocav/errors.hpp"
#include "optocav/quadrature.hpp"
#include "optocav/sql.hpp"

namespace optocav::cli {

std::vector<double> Axis::values() const {
  std::vector<double> v(static_cast<std::size_t>(std::max<long>(count, 0)));
  for (long i = 0; i < count; ++i) {
    const double m = static_cast<double>(count - 1), j = static_cast<double>(i);
    v[static_cast<std::size_t>(i)] = count == 1 ? start : (start * (m - j) + stop * j) / m;
  }
  return v;
}

const std::vector<std::string>& sweep_axis_names() {
  static const std::vector<std::string> n = {"k", "tau", "alpha", "phi-alpha", "phi", "lambda"};
  return n;
}

const std::vector<std::string>& sweep_observables() {
  static const std::vector<std::string> n = {"dtheta", "theta_mean", "sigma", "theta_tilde",
                                             "dx_phi", "snr", "f_min"};
  return n;
}

Axis parse_axis(const std::string& text) {
  const auto eq = text.find('=');
  const auto c1 = text.find(':', eq == std::string::npos ? 0 : eq);
  const auto c2 = c1 == std::string::npos ? c1 : text.find(':', c1 + 1);
  if (eq == std::string::npos || c1 == std::string::npos || c2 == std::string::npos)
    throw PreconditionError("axis must look like name=start:stop:count, got '" + text + "'");
  Axis a;
  a.name = text.substr(0, eq);
  const auto& names = sweep_axis_names();
  if (std::find(names.begin(), names.end(), a.name) == names.end())
    throw PreconditionError("unknown sweep axis '" + a.name + "'");
  try {
    std::size_t used = 0;
    const std::string s0 = text.substr(eq + 1, c1 - eq - 1), s1 = text.substr(c1 + 1, c2 - c1 - 1),
                      s2 = text.substr(c2 + 1);
    a.start = std::stod(s0, &used);
    if (used != s0.size()) throw std::invalid_argument(s0);
    a.stop = std::stod(s1, &used);
    if (used != s1.size()) throw std::invalid_argument(s1);
    const double n = std::stod(s2, &used);
    if (used != s2.size() || n != std::floor(n) || n < 0) throw std::invalid_argument(s2);
    if (n > kMaxSweepPoints)
      throw PreconditionError("sweep of " + s2 + " points exceeds the limit of 10^7");
    a.count = static_cast<long>(n);
  } catch (const std::logic_error&) {
    throw PreconditionError("bad number in axis '" + text + "'");
  }
  if (!std::isfinite(a.start) || !std::isfinite(a.stop)) throw PreconditionError("axis bounds must be finite");
  return a;
}

namespace {

struct Point {
  double k, tau, alpha, phi_alpha, phi, lambda;
};

void set(Point& p, const std::string& name, double v) {
  if (name == "k") p.k = v;
  else if (name == "tau") p.tau = v;
  else if (name == "alpha") p.alpha = v;
  else if (name == "phi-alpha") p.phi_alpha = v;
  else if (name == "phi") p.phi = v;
  else p.lambda = v;
}

void validate(const Point& p) {
  if (!(p.k > 0.0) || !std::isfinite(p.k)) throw PreconditionError("sweep needs k > 0");
  if (!(p.tau > 0.0) || !std::isfinite(p.tau)) throw PreconditionError("sweep needs tau > 0");
  if (!(p.alpha > 0.0) || !std::isfinite(p.alpha)) throw PreconditionError("sweep needs alpha > 0");
  if (!std::isfinite(p.phi_alpha) || !std::isfinite(p.phi) || !std::isfinite(p.lambda))
    throw PreconditionError("sweep parameters must be finite");
}

std::vector<Cell> evaluate(const Point& p, const std::vector<std::string>& obs, BStrategy strategy,
                           const SystemParams& mirror) {
  EvolutionPoint ep = evolution_point(p.tau, p.lambda);
  phase_zeta(ep, p.k, {0.0, 0.0});
  const auto has = [&](const char* n) { return std::find(obs.begin(), obs.end(), n) != obs.end(); };
  PhaseMoments m;
  if (has("dtheta") || has("theta_mean") || has("snr")) m = heterodyne_moments(p.alpha, p.phi_alpha, ep, p.k, strategy);
  GaussianApprox ga;
  if (has("sigma") || has("theta_tilde")) ga = gaussian_approx(p.k, p.tau, p.alpha, ep.zeta, p.phi_alpha);
  std::vector<Cell> out;
  for (const auto& o : obs) {
    if (o == "dtheta") out.emplace_back(m.uncertainty);
    else if (o == "theta_mean") out.emplace_back(m.mean);
    else if (o == "sigma") out.emplace_back(ga.sigma);
    else if (o == "theta_tilde") out.emplace_back(normalize_phase(ga.theta_tilde));
    else if (o == "dx_phi")
      out.emplace_back(std::sqrt(quadrature_variance(p.phi, std::polar(p.alpha, p.phi_alpha), ep, p.k).variance));
    else if (o == "snr") out.emplace_back(2.0 * p.k * ep.lambda * ep.mu / m.uncertainty);
    else {
      const double t = p.tau / mirror.omega_m;
      out.emplace_back(std::sqrt(18.0 * mirror.hbar * mirror.mass / mirror.omega_m) / (t * t));
    }
  }
  return out;
}

}  // namespace

Table run_sweep(const SweepRequest& r) {
  if (r.axes.size() > 2) throw PreconditionError("a sweep takes at most two axes");
  if (r.axes.size() == 2 && r.axes[0].name == r.axes[1].name) throw PreconditionError("sweep axes must differ");
  std::vector<std::string> obs = r.observables.empty() ? sweep_observables() : r.observables;
  for (const auto& o : obs) {
    const auto& all = sweep_observables();
    if (std::find(all.begin(), all.end(), o) == all.end()) throw PreconditionError("unknown observable '" + o + "'");
  }
  double total = 1.0;
  for (const auto& a : r.axes) total *= static_cast<double>(a.count);
  if (total > kMaxSweepPoints)
    throw PreconditionError("sweep of " + std::to_string(static_cast<long long>(total)) +
                            " points exceeds the limit of 10^7");

  Table t;
  for (const auto& a : r.axes) t.header.push_back(a.name);
  for (const auto& o : obs) t.header.push_back(o);

  const Point base{r.k, r.tau, r.alpha, r.phi_alpha, r.phi, r.lambda};
  std::vector<Point> pts;
  std::vector<std::vector<double>> coords;
  const auto v0 = r.axes.empty() ? std::vector<double>{} : r.axes[0].values();
  const auto v1 = r.axes.size() < 2 ? std::vector<double>{} : r.axes[1].values();
  if (r.axes.empty()) {
    pts.push_back(base);
    coords.emplace_back();
  } else {
    for (double a : v0) {
      if (r.axes.size() == 1) {
        Point p = base;
        set(p, r.axes[0].name, a);
        pts.push_back(p);
        coords.push_back({a});
        continue;
      }
      for (double b : v1) {
        Point p = base;
        set(p, r.axes[0].name, a);
        set(p, r.axes[1].name, b);
        pts.push_back(p);
        coords.push_back({a, b});
      }
    }
  }
  for (const auto& p : pts) validate(p);

  const SystemParams mirror = interferometer_preset();
  std::vector<std::vector<Cell>> results(pts.size());
  std::vector<std::exception_ptr> errors(pts.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i; (i = next++) < pts.size();) {
      try {
        results[i] = evaluate(pts[i], obs, r.strategy, mirror);
      } catch (...) {
        errors[i] = std::current_exception();
      }
    }
  };
  const unsigned hw = r.threads ? r.threads : std::max(1u, std::thread::hardware_concurrency());
  const unsigned n_threads = static_cast<unsigned>(std::min<std::size_t>(hw, pts.size()));
  if (n_threads <= 1) {
    worker();
  } else {
    std::vector<std::jthread> pool;
    for (unsigned i = 0; i < n_threads; ++i) pool.emplace_back(worker);
  }
  for (const auto& e : errors)
    if (e) std::rethrow_exception(e);

  for (std::size_t i = 0; i < pts.size(); ++i) {
    std::vector<Cell> row(coords[i].begin(), coords[i].end());
    row.insert(row.end(), results[i].begin(), results[i].end());
    t.add_row(std::move(row));
  }
  return t;
}

}  // namespace optocav::cli
