#pragma once

#include <complex>

#include "optocav/log_complex.hpp"

namespace optocav {

/// ln Gamma(x) for x > 0.
double log_gamma(double x);

/// ln(e^{-lambda} lambda^n / n!) without cancellation for large n and lambda.
double log_poisson(long n, double lambda);

/// ln Gamma(x + a) - ln Gamma(x + b), stable for large x (x >= 1; a, b >= 0).
double log_gamma_ratio(double x, double a, double b);

/// Tuning of the series engine shared by every coefficient route.
struct SeriesOptions {
  // Cancellation (log2 of sum|t| / |sum t|) above which the double result is
  // rejected and recomputed in multiprecision.
  double loss_threshold_bits = 10.0;
  // Nonzero forces a multiprecision pass with at least this many bits.
  long force_precision_bits = 0;
  long max_precision_bits = 1L << 18;
  long max_terms = 10'000'000;
};

/// Diagnostics of the last series evaluation on the calling thread.
struct SeriesDiagnostics {
  long terms = 0;
  double loss_bits = 0.0;
  long precision_bits = 53;
};
SeriesDiagnostics last_series_diagnostics();

/// Confluent hypergeometric 1F1(a; b; z). Requires a > 0 and b > 0.
LogComplex kummer_phi(double a, double b, std::complex<double> z, const SeriesOptions& opt = {});

/// Same, with z = z_abs * exp(i z_arg) and z_arg kept unreduced.
LogComplex kummer_phi_polar(double a, double b, double z_abs, double z_arg,
                            const SeriesOptions& opt = {});

/// Modified Bessel function I_nu(z), nu in {0, 1/2, 1, ...}, principal branch.
LogComplex bessel_i(double nu, std::complex<double> z, const SeriesOptions& opt = {});

/// exp(-|alpha|^2 + xi^2) (1 - q^2 / (4 xi^2)) in log form. Throws DomainError if xi = 0.
LogComplex bq_asymptotic_leading(long q, std::complex<double> xi_q, double alpha_abs);

}  // namespace optocav
