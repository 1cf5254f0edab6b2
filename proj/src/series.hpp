#pragma once

// Engine for power series whose consecutive-term ratio is a positive real
// rational times a fixed complex y:  t_{j+1} = t_j * rho(j) * y.
// Every coefficient route (Kummer, Bessel, windowed n-sums) has this shape,
// so phases are linear in j and magnitudes are handled in log form.

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>
#include <vector>

#include "mp_real.hpp"
#include "optocav/errors.hpp"
#include "optocav/kernels.hpp"
#include "optocav/log_complex.hpp"
#include "optocav/specfun.hpp"

namespace optocav::detail {

// rho(j) = num/den, or sqrt(num/den) when the family sets sqrt_ratio.
struct Step {
  double num;
  double den;
};

struct SeriesSum {
  LogComplex value;  // relative to t_{jc} = 1
  double loss_bits = 0.0;
  long j_min = 0;
  long j_max = 0;
  long precision_bits = 53;
};

void record_diagnostics(const SeriesSum& s);

inline constexpr double kTailLog = -41.446531673892822;  // ln(1e-18)
inline constexpr int kTailRun = 50;

template <class Family>
double log_step(const Family& f, long j, double log_y) {
  const Step s = f.step(j);
  if (s.num == 0.0) return -std::numeric_limits<double>::infinity();
  const double l = std::log(s.num / s.den);
  return (Family::sqrt_ratio ? 0.5 * l : l) + log_y;
}

template <class Family>
void mp_apply_step(const Family& f, long j, MpComplex& t, MpReal& tmp, bool inverse) {
  const Step s = f.step(j);
  mpfr_set_d(tmp.get(), s.num, MPFR_RNDN);
  mpfr_div_d(tmp.get(), tmp.get(), s.den, MPFR_RNDN);
  if (Family::sqrt_ratio) mpfr_sqrt(tmp.get(), tmp.get(), MPFR_RNDN);
  if (inverse)
    t.unscale(tmp);
  else
    t.scale(tmp);
}

// Sums the series around index jc, growing outward until kTailRun consecutive
// terms fall below 1e-18 of the largest term (further when cancellation
// forces a multiprecision pass).
template <class Family>
SeriesSum sum_series(const Family& fam, long jc, const SeriesOptions& opt) {
  const double y_abs = fam.y_abs;
  const double y_arg = fam.y_arg;
  SeriesSum out;
  if (y_abs == 0.0) {
    if (jc != 0) throw PreconditionError("series with y = 0 must start at j = 0");
    out.value = LogComplex::one();
    record_diagnostics(out);
    return out;
  }
  const double log_y = std::log(y_abs);

  // Log-magnitude walk, Kahan-compensated so 10^6-term walks keep ~1e-12.
  // Stops after kTailRun consecutive terms below tail_log relative to the max.
  std::vector<double> up, down;
  double lmax = 0.0;
  auto walk = [&](double tail_log) {
    up.assign(1, 0.0);
    down.clear();
    lmax = 0.0;
    double l = 0.0, comp = 0.0;
    int below = 0;
    for (long j = jc;; ++j) {
      const double d = log_step(fam, j, log_y);
      if (d == -std::numeric_limits<double>::infinity()) break;
      const double yk = d - comp;
      const double tk = l + yk;
      comp = (tk - l) - yk;
      l = tk;
      up.push_back(l);
      lmax = std::max(lmax, l);
      below = (l < lmax + tail_log) ? below + 1 : 0;
      if (below >= kTailRun) break;
      if (static_cast<long>(up.size()) > opt.max_terms)
        throw NumericalError("series did not converge within " + std::to_string(opt.max_terms) +
                             " terms (log term " + std::to_string(l) + ", log max " +
                             std::to_string(lmax) + ")");
    }
    l = 0.0;
    comp = 0.0;
    below = 0;
    for (long j = jc; j > 0; --j) {
      const double d = -log_step(fam, j - 1, log_y);
      const double yk = d - comp;
      const double tk = l + yk;
      comp = (tk - l) - yk;
      l = tk;
      down.push_back(l);
      lmax = std::max(lmax, l);
      below = (l < lmax + tail_log) ? below + 1 : 0;
      if (below >= kTailRun) break;
    }
    out.j_min = jc - static_cast<long>(down.size());
    out.j_max = jc + static_cast<long>(up.size()) - 1;
  };
  walk(kTailLog);

  std::vector<double> mags;
  mags.reserve(down.size() + up.size());
  for (auto it = down.rbegin(); it != down.rend(); ++it) mags.push_back(std::exp(*it - lmax));
  for (double l : up) mags.push_back(std::exp(l - lmax));
  const double start = static_cast<double>(out.j_min - jc) * y_arg;
  const auto rs = kernels::active().rotating_sum(mags, start, y_arg);
  const double abs_s = std::abs(rs.sum);
  out.loss_bits = abs_s > 0.0 ? std::log2(rs.abs_sum / abs_s) : std::numeric_limits<double>::infinity();
  const double log2_abs_peak = std::log2(rs.abs_sum);

  if (out.loss_bits <= opt.loss_threshold_bits && opt.force_precision_bits == 0) {
    out.value = LogComplex::polar(std::log(abs_s) + lmax, std::arg(rs.sum));
    record_diagnostics(out);
    return out;
  }

  // Multiprecision pass. Working precision is loss + kSpareBits + 32; the
  // result is accepted once the measured loss is within prec - kSpareBits,
  // which keeps both rounding and tail truncation below 2^-60 relative.
  constexpr long kSpareBits = 53 + 64;
  double est = std::isfinite(out.loss_bits) ? out.loss_bits : 256.0;
  long prec = std::max<long>(opt.force_precision_bits, kSpareBits + 32 + static_cast<long>(std::ceil(est)));
  for (;;) {
    if (prec > opt.max_precision_bits)
      throw NumericalError("series cancellation exceeds " + std::to_string(opt.max_precision_bits) +
                           " bits of working precision");
    // The sum may be 2^-(prec - kSpareBits) of the largest term, so the tail
    // must reach that far down too.
    walk(kTailLog - static_cast<double>(prec - kSpareBits) * std::log(2.0));
    const double log2_abs_total = log2_abs_peak + lmax / std::log(2.0);
    MpReal yr(prec), yi(prec), arg(prec, y_arg), ya(prec, y_abs), ya2(prec), tmp(prec);
    mpfr_sin_cos(yi.get(), yr.get(), arg.get(), MPFR_RNDN);
    mpfr_mul(yr.get(), yr.get(), ya.get(), MPFR_RNDN);
    mpfr_mul(yi.get(), yi.get(), ya.get(), MPFR_RNDN);
    mpfr_sqr(ya2.get(), ya.get(), MPFR_RNDN);
    MpReal nyi(prec);
    mpfr_neg(nyi.get(), yi.get(), MPFR_RNDN);

    MpComplex sum(prec, 1.0, 0.0), t(prec, 1.0, 0.0);
    for (long j = jc; j < out.j_max; ++j) {
      t.mul(yr, yi);
      mp_apply_step(fam, j, t, tmp, false);
      sum.add(t);
    }
    MpComplex td(prec, 1.0, 0.0);
    for (long j = jc; j > out.j_min; --j) {
      td.mul(yr, nyi);
      td.unscale(ya2);
      mp_apply_step(fam, j - 1, td, tmp, true);
      sum.add(td);
    }
    MpReal mag(prec), lg(prec), ph(prec);
    mpfr_hypot(mag.get(), sum.re().get(), sum.im().get(), MPFR_RNDN);
    double loss_mp = std::numeric_limits<double>::infinity();
    if (!mpfr_zero_p(mag.get())) {
      mpfr_log2(lg.get(), mag.get(), MPFR_RNDN);
      loss_mp = log2_abs_total - lg.to_double();
    }
    if (loss_mp <= static_cast<double>(prec - kSpareBits)) {
      mpfr_log(lg.get(), mag.get(), MPFR_RNDN);
      mpfr_atan2(ph.get(), sum.im().get(), sum.re().get(), MPFR_RNDN);
      out.value = LogComplex::polar(lg.to_double(), ph.to_double());
      out.loss_bits = loss_mp;
      out.precision_bits = prec;
      record_diagnostics(out);
      return out;
    }
    const long need = std::isfinite(loss_mp) ? kSpareBits + 32 + static_cast<long>(std::ceil(loss_mp)) : 2 * prec;
    prec = std::max(2 * prec, need);
  }
}

}  // namespace optocav::detail
