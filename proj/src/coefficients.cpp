#include <cmath>
#include <cstdio>
#include <mutex>
#include <numbers>
#include <string>

#include "optocav/errors.hpp"
#include "optocav/phase.hpp"
#include "series.hpp"

namespace optocav {

namespace {

// Windowed B_q n-sum: terms Gamma(n+h+1)/Gamma(n+Q+1) xi^{2n}/n!, h = Q/2.
struct BSumFamily {
  static constexpr bool sqrt_ratio = false;
  double h, Q;
  double y_abs, y_arg;
  detail::Step step(long j) const {
    const double n = static_cast<double>(j);
    return {n + h + 1.0, (n + Q + 1.0) * (n + 1.0)};
  }
};

// A_q n-sum: terms xi^{2n}/sqrt(n! (n+Q)!).
struct ASumFamily {
  static constexpr bool sqrt_ratio = true;
  double Q;
  double y_abs, y_arg;
  detail::Step step(long j) const {
    const double n = static_cast<double>(j);
    return {1.0, (n + 1.0) * (n + Q + 1.0)};
  }
};

// Itilde_{nu}(w) + y Itilde_{nu+1}(w) with w = 2y, folded into one power
// series in y = xi^2/4: even terms 1/(m! Gamma(m+nu+1)) y^{2m}, odd terms
// 1/(m! Gamma(m+nu+2)) y^{2m+1}; normalised so the first term is 1.
struct BesselPairFamily {
  static constexpr bool sqrt_ratio = false;
  double nu;
  double y_abs, y_arg;
  detail::Step step(long j) const {
    const double m = static_cast<double>(j / 2);
    if (j % 2 == 0) return {1.0, m + nu + 1.0};
    return {1.0, m + 1.0};
  }
};

long peak_index(double alpha2, double shift) {
  const double n = std::floor(alpha2 - shift);
  return n > 0.0 ? static_cast<long>(n) : 0L;
}

LogComplex b_series(long Q, double alpha, double psi, const SeriesOptions& opt) {
  const double a2 = alpha * alpha;
  const double h = 0.5 * static_cast<double>(Q);
  const long jc = peak_index(a2, h);
  const BSumFamily f{h, static_cast<double>(Q), a2, 2.0 * psi};
  const auto s = detail::sum_series(f, jc, opt);
  const double jcd = static_cast<double>(jc);
  const double lpre = log_poisson(jc, a2) + static_cast<double>(Q) * std::log(alpha) +
                      log_gamma_ratio(jcd + 1.0, h, static_cast<double>(Q));
  const double ppre = (static_cast<double>(Q) + 2.0 * jcd) * psi;
  return s.value * LogComplex::polar(lpre, ppre);
}

LogComplex b_kummer(long Q, double alpha, double psi, const SeriesOptions& opt) {
  const double a2 = alpha * alpha;
  const double h = 0.5 * static_cast<double>(Q);
  const LogComplex phi = kummer_phi_polar(h + 1.0, static_cast<double>(Q) + 1.0, a2, 2.0 * psi, opt);
  const double lpre = -a2 + static_cast<double>(Q) * std::log(alpha) + std::lgamma(h + 1.0) -
                      std::lgamma(static_cast<double>(Q) + 1.0);
  return phi * LogComplex::polar(lpre, static_cast<double>(Q) * psi);
}

LogComplex b_bessel(long Q, double alpha, double psi, const SeriesOptions& opt) {
  const double a2 = alpha * alpha;
  const double nu = 0.5 * (static_cast<double>(Q) - 1.0);
  const BesselPairFamily f{nu, 0.25 * a2, 2.0 * psi};
  const auto s = detail::sum_series(f, 0, opt);
  const double sp = std::sin(psi);
  // (sqrt(pi)/2) e^{-|alpha|^2 + xi^2/2} xi (xi/2)^{Q-1} / Gamma(nu+1)
  const double lpre = std::log(0.5 * std::sqrt(std::numbers::pi)) - 0.5 * a2 - a2 * sp * sp +
                      std::log(alpha) + (static_cast<double>(Q) - 1.0) * std::log(0.5 * alpha) -
                      std::lgamma(nu + 1.0);
  const double ppre = 0.5 * a2 * std::sin(2.0 * psi) + static_cast<double>(Q) * psi;
  return s.value * LogComplex::polar(lpre, ppre);
}

// Full large-|xi| expansion e^{-|alpha|^2 + z} sum_s (h)_s (-h)_s / s! z^{-s}.
// Returns false when the expansion does not reach double precision.
bool b_asymptotic_full(long Q, double alpha, double psi, LogComplex& out) {
  const double a2 = alpha * alpha;
  if (a2 * std::cos(2.0 * psi) < 60.0) return false;
  const double h = 0.5 * static_cast<double>(Q);
  const std::complex<double> zinv = std::polar(1.0 / a2, -2.0 * psi);
  std::complex<double> term(1.0, 0.0), sum(1.0, 0.0);
  double prev = 1.0;
  bool converged = false;
  for (int s = 1; s < 400; ++s) {
    const double sd = static_cast<double>(s);
    term *= (h + sd - 1.0) * (sd - 1.0 - h) / sd * zinv;
    const double t = std::abs(term);
    if (t == 0.0) {
      converged = true;
      break;
    }
    if (t > prev) break;
    sum += term;
    prev = t;
    if (t < 1e-17 * std::abs(sum)) {
      converged = true;
      break;
    }
  }
  if (!converged) return false;
  const double sp = std::sin(psi);
  out = LogComplex::polar(-2.0 * a2 * sp * sp, a2 * std::sin(2.0 * psi)) * LogComplex::from_complex(sum);
  return true;
}

LogComplex b_automatic(long Q, double alpha, double psi, const SeriesOptions& opt) {
  if (alpha <= 30.0) return b_kummer(Q, alpha, psi, opt);
  if (alpha <= 300.0) return b_series(Q, alpha, psi, opt);
  LogComplex v;
  if (b_asymptotic_full(Q, alpha, psi, v)) return v;
  return b_series(Q, alpha, psi, opt);
}

std::once_flag g_boundary_once;
AutoBoundaryReport g_boundary;

void run_boundary_check(long Q, double x) {
  std::call_once(g_boundary_once, [&] {
    AutoBoundaryReport r;
    r.ran = true;
    const long qq = std::max<long>(Q, 1);
    const double psi_low = -x * static_cast<double>(qq);
    r.rel_diff_low = relative_difference(b_kummer(qq, 30.0, psi_low, {}), b_series(qq, 30.0, psi_low, {}));
    LogComplex hi;
    if (b_asymptotic_full(qq, 300.0, psi_low, hi))
      r.rel_diff_high = relative_difference(hi, b_series(qq, 300.0, psi_low, {}));
    r.ok = r.rel_diff_low < 1e-8 && r.rel_diff_high < 1e-8;
    if (!r.ok)
      std::fprintf(stderr, "warning: B_q strategy boundary mismatch (|alpha|=30: %.3g, |alpha|=300: %.3g)\n",
                   r.rel_diff_low, r.rel_diff_high);
    g_boundary = r;
  });
}

FourierCoeff finish(long q, double alpha, double x, LogComplex v_pos) {
  FourierCoeff c;
  c.q = q;
  c.xi_q = std::polar(alpha, -x * static_cast<double>(q));
  c.value = q < 0 ? v_pos.conj() : v_pos;
  return c;
}

void check_inputs(double alpha, double mu, double k) {
  if (!(alpha >= 0.0) || !std::isfinite(alpha)) throw DomainError("alpha_abs must be finite and >= 0");
  if (!std::isfinite(mu) || !std::isfinite(k)) throw DomainError("mu and k must be finite");
}

}  // namespace

std::string_view to_string(BStrategy s) {
  switch (s) {
    case BStrategy::series: return "series";
    case BStrategy::kummer: return "kummer";
    case BStrategy::bessel: return "bessel";
    case BStrategy::asymptotic: return "asymptotic";
    case BStrategy::automatic: return "auto";
  }
  return "auto";
}

BStrategy parse_strategy(std::string_view s) {
  if (s == "series") return BStrategy::series;
  if (s == "kummer") return BStrategy::kummer;
  if (s == "bessel") return BStrategy::bessel;
  if (s == "asymptotic") return BStrategy::asymptotic;
  if (s == "auto") return BStrategy::automatic;
  throw std::invalid_argument("unknown strategy: " + std::string(s));
}

AutoBoundaryReport auto_boundary_report() { return g_boundary; }

FourierCoeff coeff_A(long q, double alpha_abs, double mu, double k, const SeriesOptions& opt) {
  check_inputs(alpha_abs, mu, k);
  const double x = mu * k * k;
  const long Q = std::labs(q);
  if (Q == 0) return finish(q, alpha_abs, x, LogComplex::one());
  if (alpha_abs == 0.0) return finish(q, alpha_abs, x, LogComplex::zero());
  const double a2 = alpha_abs * alpha_abs;
  const double psi = -x * static_cast<double>(Q);
  const double Qd = static_cast<double>(Q);
  const long jc = peak_index(a2, 0.5 * Qd);
  const ASumFamily f{Qd, a2, 2.0 * psi};
  const auto s = detail::sum_series(f, jc, opt);
  const double jcd = static_cast<double>(jc);
  const double lpre = log_poisson(jc, a2) + Qd * std::log(alpha_abs) - 0.5 * log_gamma_ratio(jcd + 1.0, Qd, 0.0);
  return finish(q, alpha_abs, x, s.value * LogComplex::polar(lpre, (Qd + 2.0 * jcd) * psi));
}

FourierCoeff coeff_B(long q, double alpha_abs, double mu, double k, BStrategy strategy,
                     const SeriesOptions& opt) {
  check_inputs(alpha_abs, mu, k);
  const double x = mu * k * k;
  const long Q = std::labs(q);
  if (strategy == BStrategy::asymptotic) {
    if (alpha_abs == 0.0) throw DomainError("asymptotic B_q needs xi_q != 0");
    if (Q == 0) return finish(q, alpha_abs, x, LogComplex::one());
    const auto xi = std::polar(alpha_abs, -x * static_cast<double>(Q));
    return finish(q, alpha_abs, x, bq_asymptotic_leading(Q, xi, alpha_abs));
  }
  if (Q == 0) return finish(q, alpha_abs, x, LogComplex::one());
  if (alpha_abs == 0.0) return finish(q, alpha_abs, x, LogComplex::zero());
  const double psi = -x * static_cast<double>(Q);
  LogComplex v;
  switch (strategy) {
    case BStrategy::series: v = b_series(Q, alpha_abs, psi, opt); break;
    case BStrategy::kummer: v = b_kummer(Q, alpha_abs, psi, opt); break;
    case BStrategy::bessel: v = b_bessel(Q, alpha_abs, psi, opt); break;
    default:
      run_boundary_check(Q, x);
      v = b_automatic(Q, alpha_abs, psi, opt);
      break;
  }
  return finish(q, alpha_abs, x, v);
}

std::vector<FourierCoeff> coeffs_B(long q_cut, double alpha_abs, double mu, double k, BStrategy strategy,
                                   const SeriesOptions& opt) {
  std::vector<FourierCoeff> out;
  out.reserve(static_cast<std::size_t>(std::max<long>(q_cut, 0)));
  for (long q = 1; q <= q_cut; ++q) out.push_back(coeff_B(q, alpha_abs, mu, k, strategy, opt));
  return out;
}

std::vector<FourierCoeff> coeffs_A(long q_cut, double alpha_abs, double mu, double k, const SeriesOptions& opt) {
  std::vector<FourierCoeff> out;
  out.reserve(static_cast<std::size_t>(std::max<long>(q_cut, 0)));
  for (long q = 1; q <= q_cut; ++q) out.push_back(coeff_A(q, alpha_abs, mu, k, opt));
  return out;
}

}  // namespace optocav
