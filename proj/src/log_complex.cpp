#include "optocav/log_complex.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

namespace optocav {

double normalize_phase(double phase) {
  double r = std::remainder(phase, 2.0 * std::numbers::pi);
  if (r <= -std::numbers::pi) r += 2.0 * std::numbers::pi;
  return r;
}

LogComplex LogComplex::from_complex(std::complex<double> z) {
  const double m = std::abs(z);
  if (m == 0.0) return zero();
  return {std::log(m), normalize_phase(std::arg(z))};
}

LogComplex LogComplex::polar(double log_mag, double phase) {
  if (log_mag == -std::numeric_limits<double>::infinity()) return zero();
  return {log_mag, normalize_phase(phase)};
}

std::complex<double> LogComplex::value() const {
  if (is_zero()) return {0.0, 0.0};
  return std::polar(std::exp(log_mag), phase);
}

double relative_difference(LogComplex a, LogComplex b) {
  if (b.is_zero()) return a.is_zero() ? 0.0 : std::numeric_limits<double>::infinity();
  if (a.is_zero()) return 1.0;
  // |a/b - 1| with a/b = exp(dl + i dp)
  const double dl = a.log_mag - b.log_mag;
  const double dp = normalize_phase(a.phase - b.phase);
  const std::complex<double> w(dl, dp);
  if (std::abs(w) < 0.5) {
    // expm1 of a complex argument without cancellation
    const double em1 = std::expm1(dl);
    const double s = std::sin(0.5 * dp);
    const std::complex<double> d(em1 * std::cos(dp) - 2.0 * s * s, std::exp(dl) * std::sin(dp));
    return std::abs(d);
  }
  return std::abs(std::exp(w) - 1.0);
}

LogComplex logsum_complex(std::span<const LogComplex> terms) {
  double ref = -std::numeric_limits<double>::infinity();
  for (const auto& t : terms) ref = std::max(ref, t.log_mag);
  if (ref == -std::numeric_limits<double>::infinity()) return LogComplex::zero();
  // Neumaier summation on each component
  double sr = 0.0, cr = 0.0, si = 0.0, ci = 0.0;
  auto add = [](double& s, double& c, double x) {
    const double t = s + x;
    if (std::abs(s) >= std::abs(x))
      c += (s - t) + x;
    else
      c += (x - t) + s;
    s = t;
  };
  for (const auto& t : terms) {
    if (t.is_zero()) continue;
    const double m = std::exp(t.log_mag - ref);
    add(sr, cr, m * std::cos(t.phase));
    add(si, ci, m * std::sin(t.phase));
  }
  const std::complex<double> s(sr + cr, si + ci);
  const LogComplex scaled = LogComplex::from_complex(s);
  if (scaled.is_zero()) return scaled;
  return {scaled.log_mag + ref, scaled.phase};
}

}  // namespace optocav
