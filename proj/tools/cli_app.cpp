#include "cli_app.hpp"

#include <CLI11.hpp>
#include <algorithm>
#include <functional>
#include <memory>
#include <optional>
#include <ostream>
#include <sstream>

#include "checks.hpp"
#include "csv.hpp"
#include "figures.hpp"
#include "optocav/errors.hpp"
#include "sweep.hpp"

namespace optocav::cli {

namespace {

std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return "";
  const auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

bool given(const std::vector<std::string>& args, const std::string& flag) {
  return std::any_of(args.begin(), args.end(),
                     [&](const std::string& a) { return a == flag || a.rfind(flag + "=", 0) == 0; });
}

struct Output {
  std::string out = "-";
  std::string format = "csv";
};

void add_output(CLI::App* app, Output& o, bool svg_ok, const std::string& default_out) {
  o.out = default_out;
  app->add_option("--out", o.out, "Output path; '-' writes to stdout, extension picked by --format")
      ->capture_default_str();
  if (svg_ok)
    app->add_option("--format", o.format, "csv, svg or both")
        ->check(CLI::IsMember({"csv", "svg", "both"}))
        ->capture_default_str();
}

std::string strip_ext(const std::string& p) {
  for (const char* ext : {".csv", ".svg"}) {
    const std::string e = ext;
    if (p.size() > e.size() && p.compare(p.size() - e.size(), e.size(), e) == 0) return p.substr(0, p.size() - e.size());
  }
  return p;
}

void emit(const Output& o, const Table& t, const Plot* plot, std::ostream& out) {
  const bool csv = o.format != "svg", svg = o.format != "csv";
  if (o.out == "-") {
    if (csv && svg) throw PreconditionError("--format both needs a file path for --out");
    out << (csv ? to_csv(t) : to_svg(t, *plot)) << std::flush;
    return;
  }
  // Both strings exist before anything is written.
  const std::string c = csv ? to_csv(t) : "", s = svg ? to_svg(t, *plot) : "";
  const std::string stem = strip_ext(o.out);
  if (csv) write_file(stem + ".csv", c);
  if (svg) write_file(stem + ".svg", s);
}

template <class T>
void opt(CLI::App* app, const std::string& name, std::optional<T>& v, const std::string& help) {
  app->add_option(name, v, help);
}

CLI::Option* strategy_opt(CLI::App* app, std::string& s) {
  return app->add_option("--strategy", s, "B_q route: series, kummer, bessel, asymptotic or auto")
      ->check(CLI::IsMember({"series", "kummer", "bessel", "asymptotic", "auto"}))
      ->capture_default_str();
}

}  // namespace

std::vector<std::string> merge_config(const std::vector<std::string>& args) {
  std::vector<std::string> rest;
  std::optional<std::string> path;
  for (std::size_t i = 0; i < args.size(); ++i) {
    if (args[i] == "--config") {
      if (i + 1 >= args.size()) throw PreconditionError("--config needs a path");
      path = args[++i];
    } else if (args[i].rfind("--config=", 0) == 0) {
      path = args[i].substr(9);
    } else {
      rest.push_back(args[i]);
    }
  }
  if (!path) return rest;
  std::istringstream in(read_file(*path));
  std::string line;
  std::vector<std::string> extra;
  for (long no = 1; std::getline(in, line); ++no) {
    line = trim(line.substr(0, line.find('#')));
    if (line.empty()) continue;
    const auto eq = line.find('=');
    if (eq == std::string::npos)
      throw PreconditionError(*path + ":" + std::to_string(no) + ": expected key=value");
    const std::string key = trim(line.substr(0, eq)), value = trim(line.substr(eq + 1));
    if (key.empty()) throw PreconditionError(*path + ":" + std::to_string(no) + ": empty key");
    const std::string flag = "--" + key;
    if (given(rest, flag)) continue;
    extra.push_back(flag);
    extra.push_back(value);
  }
  rest.insert(rest.end(), extra.begin(), extra.end());
  return rest;
}

int run(const std::vector<std::string>& raw_args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Phase and quadrature statistics of a cavity field coupled to a moving mirror", "optocav"};
  app.require_subcommand(1);
  std::function<int()> action;

  // figure1 .. figure5
  FigureOverrides fo;
  std::string strategy = "auto";
  Output fig_out;
  int fig_n = 0;
  for (int n = 1; n <= 5; ++n) {
    auto* sub = app.add_subcommand("figure" + std::to_string(n), "Reproduce figure " + std::to_string(n));
    opt(sub, "--k", fo.k, "Coupling k");
    opt(sub, "--tau", fo.tau, "Scaled time");
    opt(sub, "--alpha", fo.alpha, "Field amplitude |alpha|");
    opt(sub, "--phi-alpha", fo.phi_alpha, "Field phase");
    opt(sub, "--alpha-min", fo.alpha_min, "Smallest |alpha|");
    opt(sub, "--alpha-max", fo.alpha_max, "Largest |alpha|");
    opt(sub, "--alpha-step", fo.alpha_step, "|alpha| spacing");
    opt(sub, "--tau-max", fo.tau_max, "Largest tau (figure 3)");
    opt(sub, "--points", fo.points, "Number of abscissa points");
    strategy_opt(sub, strategy);
    add_output(sub, fig_out, true, "figure" + std::to_string(n));
    sub->callback([&, n] {
      fig_n = n;
      action = [&] {
        fo.strategy = parse_strategy(strategy);
        const FigureOutput f = run_figure(fig_n, fo);
        emit(fig_out, f.table, &f.plot, out);
        return int{kOk};
      };
    });
  }

  // phase-dist
  PhaseDistRequest pd;
  double pd_alpha = 2.0, pd_phi_alpha = 0.0, beta_re = 0.0, beta_im = 0.0;
  std::string pd_strategy = "auto";
  Output pd_out;
  {
    auto* sub = app.add_subcommand("phase-dist", "Phase distribution on a theta grid");
    sub->add_option("--method", pd.method, "Route")->check(CLI::IsMember(phase_dist_methods()))->capture_default_str();
    sub->add_option("--alpha", pd_alpha, "|alpha|")->check(CLI::NonNegativeNumber)->capture_default_str();
    sub->add_option("--phi-alpha", pd_phi_alpha, "Field phase")->capture_default_str();
    sub->add_option("--beta-re", beta_re, "Mirror amplitude, real part")->capture_default_str();
    sub->add_option("--beta-im", beta_im, "Mirror amplitude, imaginary part")->capture_default_str();
    sub->add_option("--k", pd.k, "Coupling k")->capture_default_str();
    sub->add_option("--tau", pd.tau, "Scaled time")->capture_default_str();
    sub->add_option("--grid", pd.grid, "Theta points")->check(CLI::Range(16, 1 << 24))->capture_default_str();
    opt(sub, "--ncut-field", pd.ncut_field, "Field Fock cutoff");
    opt(sub, "--ncut-mirror", pd.ncut_mirror, "Mirror Fock cutoff (oracle)");
    strategy_opt(sub, pd_strategy);
    add_output(sub, pd_out, true, "-");
    sub->callback([&] {
      action = [&] {
        pd.alpha = std::polar(pd_alpha, pd_phi_alpha);
        pd.beta = {beta_re, beta_im};
        pd.strategy = parse_strategy(pd_strategy);
        const Table t = phase_dist_table(pd);
        const Plot p{"Phase distribution (" + pd.method + ")", "theta", "P(theta)", 0, {1}, false};
        emit(pd_out, t, &p, out);
        return int{kOk};
      };
    });
  }

  // quadrature
  QuadratureRequest qr;
  double q_alpha = 1000.0, q_phi_alpha = 0.0;
  Output q_out;
  {
    auto* sub = app.add_subcommand("quadrature", "Exact and approximate quadrature variance over phi");
    sub->add_option("--alpha", q_alpha, "|alpha|")->check(CLI::NonNegativeNumber)->capture_default_str();
    sub->add_option("--phi-alpha", q_phi_alpha, "Field phase")->capture_default_str();
    sub->add_option("--k", qr.k, "Coupling k")->capture_default_str();
    sub->add_option("--tau", qr.tau, "Scaled time")->capture_default_str();
    opt(sub, "--phi", qr.phi, "Single local-oscillator phase instead of a grid");
    sub->add_option("--grid", qr.grid, "Phi points over [0, pi)")->check(CLI::Range(1, 1 << 24))->capture_default_str();
    add_output(sub, q_out, true, "-");
    sub->callback([&] {
      action = [&] {
        qr.alpha = std::polar(q_alpha, q_phi_alpha);
        const Table t = quadrature_table(qr);
        const Plot p{"Delta X", "phi", "Delta X", 0, {3, 4}, false};
        emit(q_out, t, &p, out);
        return int{kOk};
      };
    });
  }

  // sql
  SqlRequest sr;
  Output s_out;
  {
    auto* sub = app.add_subcommand("sql", "Standard-quantum-limit figures for the interferometer preset");
    opt(sub, "--mass", sr.mass, "Mirror mass, kg");
    opt(sub, "--length", sr.length, "Cavity length, m");
    opt(sub, "--omega-m", sr.omega_m, "Mirror angular frequency, rad/s");
    opt(sub, "--wavelength", sr.wavelength, "Optical wavelength, m");
    sub->add_option("--time", sr.time, "Measurement time, s")->capture_default_str();
    sub->add_option("--force", sr.force, "Constant force, N")->capture_default_str();
    add_output(sub, s_out, false, "-");
    sub->callback([&] {
      action = [&] {
        emit(s_out, sql_table(sr), nullptr, out);
        return int{kOk};
      };
    });
  }

  // oracle-check
  std::string preset = "all";
  Output o_out;
  {
    auto* sub = app.add_subcommand("oracle-check", "Compare analytic routes with the truncated-Fock oracle");
    sub->add_option("--preset", preset, "small-alpha, disentangle, closed-form-vs-expm or all")
        ->check(CLI::IsMember(oracle_presets()))
        ->capture_default_str();
    add_output(sub, o_out, false, "-");
    sub->callback([&] {
      action = [&] {
        const auto r = run_preset(preset);
        emit(o_out, checks_table(r), nullptr, out);
        const bool ok = std::all_of(r.begin(), r.end(), [](const CheckResult& c) { return c.pass; });
        if (!ok) err << "oracle-check: at least one check failed\n";
        return int{ok ? kOk : kOracleFailed};
      };
    });
  }

  // sweep
  SweepRequest sw;
  std::vector<std::string> axes;
  std::string observables, sw_strategy = "auto";
  Output sw_out;
  {
    auto* sub = app.add_subcommand("sweep", "Cartesian sweep over up to two parameters");
    sub->add_option("--axis", axes, "name=start:stop:count; names k, tau, alpha, phi-alpha, phi, lambda")
        ->expected(1, 2)
        ->allow_extra_args(false);
    sub->add_option("--observables", observables,
                    "Comma list of dtheta, theta_mean, sigma, theta_tilde, dx_phi, snr, f_min (default all)");
    sub->add_option("--k", sw.k, "Coupling k")->capture_default_str();
    sub->add_option("--tau", sw.tau, "Scaled time")->capture_default_str();
    sub->add_option("--alpha", sw.alpha, "|alpha|")->capture_default_str();
    sub->add_option("--phi-alpha", sw.phi_alpha, "Field phase")->capture_default_str();
    sub->add_option("--phi", sw.phi, "Local-oscillator phase")->capture_default_str();
    sub->add_option("--lambda", sw.lambda, "Scaled constant force")->capture_default_str();
    sub->add_option("--threads", sw.threads, "Worker threads, 0 for all cores")->capture_default_str();
    strategy_opt(sub, sw_strategy);
    add_output(sub, sw_out, true, "-");
    sub->callback([&] {
      action = [&] {
        for (const auto& a : axes) sw.axes.push_back(parse_axis(a));
        std::stringstream ss(observables);
        for (std::string o; std::getline(ss, o, ',');)
          if (!trim(o).empty()) sw.observables.push_back(trim(o));
        sw.strategy = parse_strategy(sw_strategy);
        const Table t = run_sweep(sw);
        Plot p{"Sweep", sw.axes.empty() ? "" : sw.axes[0].name, "value", 0, {}, false};
        for (std::size_t c = sw.axes.size(); c < t.header.size(); ++c) p.y_columns.push_back(c);
        if (sw.axes.empty() && sw_out.format != "csv")
          throw PreconditionError("svg output needs at least one sweep axis");
        emit(sw_out, t, &p, out);
        return int{kOk};
      };
    });
  }

  try {
    std::vector<std::string> args = merge_config(raw_args);
    std::reverse(args.begin(), args.end());  // CLI11 takes the vector in reverse order
    app.parse(args);
    return action ? action() : int{kOk};
  } catch (const CLI::ParseError& e) {
    std::ostringstream o, er;
    const int code = app.exit(e, o, er);
    out << o.str();
    err << er.str();
    return code == 0 ? kOk : kValidation;
  } catch (const IoError& e) {
    err << "I/O error: " << e.what() << '\n';
    return kIo;
  } catch (const NumericalError& e) {
    err << "numerical failure: " << e.what() << '\n';
    return kNumerical;
  } catch (const std::invalid_argument& e) {  // PreconditionError, UnsupportedInput
    err << "invalid input: " << e.what() << '\n';
    return kValidation;
  } catch (const std::domain_error& e) {
    err << "invalid input: " << e.what() << '\n';
    return kValidation;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kNumerical;
  }
}

}  // namespace optocav::cli
