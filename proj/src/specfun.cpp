#include "optocav/specfun.hpp"

#include <cmath>
#include <numbers>

#include "optocav/errors.hpp"
#include "series.hpp"

namespace optocav {

namespace detail {

namespace {
thread_local SeriesDiagnostics g_last;
}

void record_diagnostics(const SeriesSum& s) {
  g_last.terms = s.j_max - s.j_min + 1;
  g_last.loss_bits = s.loss_bits;
  g_last.precision_bits = s.precision_bits;
}

SeriesDiagnostics last() { return g_last; }

}  // namespace detail

SeriesDiagnostics last_series_diagnostics() { return detail::last(); }

double log_gamma(double x) {
  if (!(x > 0.0)) throw DomainError("log_gamma requires x > 0");
  return std::lgamma(x);
}

namespace {

// lgamma(y) - [(y - 1/2) ln y - y + ln(2 pi)/2], y >= 15.
double stirling_remainder(double y) {
  const double r = 1.0 / y;
  const double r2 = r * r;
  return r * (1.0 / 12.0 - r2 * (1.0 / 360.0 - r2 * (1.0 / 1260.0 - r2 * (1.0 / 1680.0 - r2 / 1188.0))));
}

// x ln(x/np) + np - x, accurate when x ~ np.
double bd0(double x, double np) {
  if (std::abs(x - np) < 0.1 * (x + np)) {
    const double v = (x - np) / (x + np);
    double s = (x - np) * v;
    double ej = 2.0 * x * v;
    const double v2 = v * v;
    for (int j = 1; j < 1000; ++j) {
      ej *= v2;
      const double s1 = s + ej / (2 * j + 1);
      if (s1 == s) return s1;
      s = s1;
    }
    return s;
  }
  return x * std::log(x / np) + np - x;
}

}  // namespace

double log_poisson(long n, double lambda) {
  if (n < 0) return -std::numeric_limits<double>::infinity();
  if (lambda == 0.0) return n == 0 ? 0.0 : -std::numeric_limits<double>::infinity();
  if (n == 0) return -lambda;
  const double x = static_cast<double>(n);
  if (n < 15) return -lambda + x * std::log(lambda) - std::lgamma(x + 1.0);
  // Loader's saddle-point form
  const double stirlerr = stirling_remainder(x);
  return -stirlerr - bd0(x, lambda) - 0.5 * std::log(2.0 * std::numbers::pi * x);
}

double log_gamma_ratio(double x, double a, double b) {
  const double y1 = x + a;
  const double y2 = x + b;
  if (std::min(y1, y2) < 15.0) return std::lgamma(y1) - std::lgamma(y2);
  const double main = (y1 - 0.5) * std::log1p((a - b) / y2) + (a - b) * std::log(y2) - (a - b);
  return main + stirling_remainder(y1) - stirling_remainder(y2);
}

namespace {

struct KummerFamily {
  static constexpr bool sqrt_ratio = false;
  double a, b;
  double y_abs, y_arg;
  detail::Step step(long j) const {
    const double n = static_cast<double>(j);
    return {a + n, (b + n) * (n + 1.0)};
  }
};

struct BesselFamily {
  static constexpr bool sqrt_ratio = false;
  double nu;
  double y_abs, y_arg;
  detail::Step step(long j) const {
    const double m = static_cast<double>(j);
    return {1.0, (m + 1.0) * (m + nu + 1.0)};
  }
};

}  // namespace

LogComplex kummer_phi_polar(double a, double b, double z_abs, double z_arg, const SeriesOptions& opt) {
  if (!(a > 0.0) || !(b > 0.0)) throw DomainError("kummer_phi requires a > 0 and b > 0");
  if (!(z_abs >= 0.0) || !std::isfinite(z_abs) || !std::isfinite(z_arg))
    throw DomainError("kummer_phi requires a finite argument");
  const KummerFamily f{a, b, z_abs, z_arg};
  return detail::sum_series(f, 0, opt).value;
}

LogComplex kummer_phi(double a, double b, std::complex<double> z, const SeriesOptions& opt) {
  return kummer_phi_polar(a, b, std::abs(z), std::arg(z), opt);
}

LogComplex bessel_i(double nu, std::complex<double> z, const SeriesOptions& opt) {
  if (!(nu >= 0.0) || std::floor(2.0 * nu) != 2.0 * nu)
    throw DomainError("bessel_i supports nu = 0, 1/2, 1, 3/2, ...");
  if (!std::isfinite(z.real()) || !std::isfinite(z.imag())) throw DomainError("bessel_i requires finite z");
  const double zabs = std::abs(z);
  if (zabs == 0.0) return nu == 0.0 ? LogComplex::one() : LogComplex::zero();
  const double zarg = std::arg(z);
  const BesselFamily f{nu, 0.25 * zabs * zabs, 2.0 * zarg};
  const LogComplex s = detail::sum_series(f, 0, opt).value;
  const LogComplex pre = LogComplex::polar(nu * std::log(0.5 * zabs) - std::lgamma(nu + 1.0), nu * zarg);
  return s * pre;
}

LogComplex bq_asymptotic_leading(long q, std::complex<double> xi_q, double alpha_abs) {
  const double xabs = std::abs(xi_q);
  if (xabs == 0.0) throw DomainError("bq_asymptotic_leading requires xi_q != 0");
  const double psi = std::arg(xi_q);
  const double s = std::sin(psi);
  // -|alpha|^2 + xi^2 with the 1 - cos(2 psi) cancellation removed
  const double re = -(alpha_abs - xabs) * (alpha_abs + xabs) - 2.0 * xabs * xabs * s * s;
  const double im = xabs * xabs * std::sin(2.0 * psi);
  const double qd = static_cast<double>(q);
  const std::complex<double> corr = 1.0 - qd * qd / (4.0 * xi_q * xi_q);
  return LogComplex::polar(re, im) * LogComplex::from_complex(corr);
}

}  // namespace optocav
