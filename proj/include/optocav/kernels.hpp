#pragma once

#include <complex>
#include <span>
#include <string_view>

namespace optocav::kernels {

struct RotatingSum {
  std::complex<double> sum{0.0, 0.0};
  double abs_sum = 0.0;
};

struct GridMoments {
  double m0 = 0.0;  // sum p_j
  double m1 = 0.0;  // sum theta_j p_j
  double m2 = 0.0;  // sum theta_j^2 p_j
};

// Sum_j mag[j] * exp(i (start + j*step)), plus Sum_j |mag[j]|.
using RotatingSumFn = RotatingSum (*)(std::span<const double> mag, double start, double step);

// out[j] = Sum_q (a[q] cos(q theta_j) - b[q] sin(q theta_j)), q = 0 .. a.size()-1.
using CosineSeriesFn = void (*)(std::span<const double> a, std::span<const double> b,
                                std::span<const double> theta, std::span<double> out);

using GridMomentsFn = GridMoments (*)(std::span<const double> theta, std::span<const double> p);

struct Backend {
  std::string_view name;
  RotatingSumFn rotating_sum;
  CosineSeriesFn cosine_series;
  GridMomentsFn grid_moments;
};

namespace scalar {
RotatingSum rotating_sum(std::span<const double> mag, double start, double step);
void cosine_series(std::span<const double> a, std::span<const double> b,
                   std::span<const double> theta, std::span<double> out);
GridMoments grid_moments(std::span<const double> theta, std::span<const double> p);
const Backend& backend();
}  // namespace scalar

namespace avx2 {
/// False when the library was built without AVX2 support.
bool compiled();
RotatingSum rotating_sum(std::span<const double> mag, double start, double step);
void cosine_series(std::span<const double> a, std::span<const double> b,
                   std::span<const double> theta, std::span<double> out);
GridMoments grid_moments(std::span<const double> theta, std::span<const double> p);
const Backend& backend();
}  // namespace avx2

/// True when the CPU reports AVX2 and FMA.
bool cpu_has_avx2();

/// Backend chosen once per process: AVX2 when available, scalar otherwise.
/// OPTOCAV_SIMD=scalar forces the scalar path.
const Backend& active();

}  // namespace optocav::kernels
