#include <gtest/gtest.h>

#include <cmath>
#include <random>
#include <vector>

#include "optocav/kernels.hpp"

namespace k = optocav::kernels;

namespace {

bool have_avx2() { return k::avx2::compiled() && k::cpu_has_avx2(); }

std::vector<double> random_vec(std::size_t n, std::uint64_t seed, double lo, double hi) {
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> d(lo, hi);
  std::vector<double> v(n);
  for (auto& x : v) x = d(rng);
  return v;
}

}  // namespace

TEST(ScalarKernels, RotatingSumMatchesDirectSum) {
  const auto mag = random_vec(1000, 1, 0.0, 1.0);
  const double start = 0.3, step = -0.0123;
  std::complex<double> ref(0.0, 0.0);
  double abs_ref = 0.0;
  for (std::size_t j = 0; j < mag.size(); ++j) {
    ref += std::polar(mag[j], start + step * static_cast<double>(j));
    abs_ref += mag[j];
  }
  const auto r = k::scalar::rotating_sum(mag, start, step);
  EXPECT_LT(std::abs(r.sum - ref), 1e-12 * abs_ref);
  EXPECT_NEAR(r.abs_sum, abs_ref, 1e-12 * abs_ref);
}

TEST(ScalarKernels, CosineSeriesMatchesDirectSum) {
  const auto a = random_vec(37, 2, -1.0, 1.0), b = random_vec(37, 3, -1.0, 1.0);
  const auto theta = random_vec(101, 4, -3.1, 3.1);
  std::vector<double> out(theta.size());
  k::scalar::cosine_series(a, b, theta, out);
  for (std::size_t j = 0; j < theta.size(); ++j) {
    double s = 0.0;
    for (std::size_t q = 0; q < a.size(); ++q)
      s += a[q] * std::cos(q * theta[j]) - b[q] * std::sin(q * theta[j]);
    EXPECT_NEAR(out[j], s, 1e-12);
  }
}

TEST(KernelEquivalence, RotatingSum) {
  if (!have_avx2()) GTEST_SKIP() << "AVX2 not available";
  for (std::size_t n : {1u, 3u, 4u, 7u, 64u, 65u, 1000u, 100003u}) {
    const auto mag = random_vec(n, n, 0.0, 1.0);
    const auto s = k::scalar::rotating_sum(mag, -1.2, 0.731);
    const auto v = k::avx2::rotating_sum(mag, -1.2, 0.731);
    EXPECT_LT(std::abs(s.sum - v.sum), 1e-13 * s.abs_sum) << n;
    EXPECT_NEAR(s.abs_sum, v.abs_sum, 1e-13 * s.abs_sum) << n;
  }
}

TEST(KernelEquivalence, CosineSeries) {
  if (!have_avx2()) GTEST_SKIP() << "AVX2 not available";
  for (std::size_t nq : {1u, 5u, 200u, 3000u}) {
    const auto a = random_vec(nq, 10 + nq, -1.0, 1.0), b = random_vec(nq, 20 + nq, -1.0, 1.0);
    for (std::size_t ng : {16u, 17u, 4096u}) {
      std::vector<double> theta(ng), s(ng), v(ng);
      for (std::size_t j = 0; j < ng; ++j) theta[j] = -3.14159 + 6.28318 * j / ng;
      k::scalar::cosine_series(a, b, theta, s);
      k::avx2::cosine_series(a, b, theta, v);
      double scale = 0.0;
      for (std::size_t q = 0; q < nq; ++q) scale += std::abs(a[q]) + std::abs(b[q]);
      for (std::size_t j = 0; j < ng; ++j) ASSERT_NEAR(s[j], v[j], 1e-12 * scale) << nq << " " << ng << " " << j;
    }
  }
}

TEST(KernelEquivalence, GridMoments) {
  if (!have_avx2()) GTEST_SKIP() << "AVX2 not available";
  for (std::size_t n : {1u, 5u, 8192u, 8195u}) {
    const auto theta = random_vec(n, 30 + n, -3.0, 3.0), p = random_vec(n, 40 + n, 0.0, 2.0);
    const auto s = k::scalar::grid_moments(theta, p);
    const auto v = k::avx2::grid_moments(theta, p);
    EXPECT_NEAR(s.m0, v.m0, 1e-12 * s.m0);
    EXPECT_NEAR(s.m1, v.m1, 1e-12 * s.m0 * 3.0);
    EXPECT_NEAR(s.m2, v.m2, 1e-12 * s.m0 * 9.0);
  }
}

TEST(KernelDispatch, ActiveBackendIsOneOfTheVariants) {
  const auto& a = k::active();
  EXPECT_TRUE(a.name == k::scalar::backend().name || a.name == k::avx2::backend().name);
  if (have_avx2() && std::getenv("OPTOCAV_SIMD") == nullptr) EXPECT_EQ(a.name, k::avx2::backend().name);
}
