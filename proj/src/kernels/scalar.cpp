#include <cmath>

#include "optocav/kernels.hpp"

namespace optocav::kernels::scalar {

namespace {
constexpr std::size_t kReseed = 64;
}

RotatingSum rotating_sum(std::span<const double> mag, double start, double step) {
  RotatingSum r;
  const std::complex<double> rot = std::polar(1.0, step);
  std::complex<double> w;
  double sr = 0.0, si = 0.0;
  for (std::size_t j = 0; j < mag.size(); ++j) {
    if (j % kReseed == 0) w = std::polar(1.0, start + static_cast<double>(j) * step);
    sr += mag[j] * w.real();
    si += mag[j] * w.imag();
    r.abs_sum += std::abs(mag[j]);
    w *= rot;
  }
  r.sum = {sr, si};
  return r;
}

void cosine_series(std::span<const double> a, std::span<const double> b,
                   std::span<const double> theta, std::span<double> out) {
  const std::size_t nq = a.size();
  for (std::size_t j = 0; j < theta.size(); ++j) {
    const double th = theta[j];
    const double c1 = std::cos(th), s1 = std::sin(th);
    double c = 1.0, s = 0.0, acc = 0.0;
    for (std::size_t q = 0; q < nq; ++q) {
      if (q % kReseed == 0 && q > 0) {
        c = std::cos(static_cast<double>(q) * th);
        s = std::sin(static_cast<double>(q) * th);
      }
      acc += a[q] * c - b[q] * s;
      const double cn = c * c1 - s * s1;
      s = s * c1 + c * s1;
      c = cn;
    }
    out[j] = acc;
  }
}

GridMoments grid_moments(std::span<const double> theta, std::span<const double> p) {
  GridMoments m;
  for (std::size_t j = 0; j < theta.size(); ++j) {
    m.m0 += p[j];
    m.m1 += theta[j] * p[j];
    m.m2 += theta[j] * theta[j] * p[j];
  }
  return m;
}

const Backend& backend() {
  static const Backend b{"scalar", &rotating_sum, &cosine_series, &grid_moments};
  return b;
}

}  // namespace optocav::kernels::scalar
