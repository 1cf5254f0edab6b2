#pragma once

#include <complex>
#include <limits>
#include <span>

namespace optocav {

/// Maps an angle to (-pi, pi].
double normalize_phase(double phase);

/// A complex number stored as (ln|z|, arg z).
///
/// Carries magnitudes like exp(-|alpha|^2) with |alpha|^2 ~ 1e6 that do not
/// fit in a double. Zero is represented by log_mag = -inf.
struct LogComplex {
  double log_mag = -std::numeric_limits<double>::infinity();
  double phase = 0.0;

  static LogComplex zero() { return {}; }
  static LogComplex one() { return {0.0, 0.0}; }
  static LogComplex from_complex(std::complex<double> z);
  /// Builds the value exp(log_mag) * exp(i phase); phase is normalized.
  static LogComplex polar(double log_mag, double phase);

  bool is_zero() const { return log_mag == -std::numeric_limits<double>::infinity(); }
  /// Linear-domain value; underflows to 0 / overflows to inf outside double range.
  std::complex<double> value() const;
  LogComplex conj() const { return {log_mag, is_zero() ? 0.0 : normalize_phase(-phase)}; }

  friend LogComplex operator*(LogComplex a, LogComplex b) {
    if (a.is_zero() || b.is_zero()) return zero();
    return polar(a.log_mag + b.log_mag, a.phase + b.phase);
  }
  friend LogComplex operator/(LogComplex a, LogComplex b) {
    if (a.is_zero()) return zero();
    return polar(a.log_mag - b.log_mag, a.phase - b.phase);
  }
};

/// |a - b| / |b| evaluated without leaving the log domain.
double relative_difference(LogComplex a, LogComplex b);

/// Sum of log-domain terms: rescales by the largest magnitude and
/// accumulates with compensated summation. Empty input gives zero.
LogComplex logsum_complex(std::span<const LogComplex> terms);

}  // namespace optocav
