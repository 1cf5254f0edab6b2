#include <cmath>

#include "optocav/kernels.hpp"

#if defined(__AVX2__) && defined(__FMA__)
#include <immintrin.h>
#define OPTOCAV_HAVE_AVX2 1
#else
#define OPTOCAV_HAVE_AVX2 0
#endif

namespace optocav::kernels::avx2 {

#if OPTOCAV_HAVE_AVX2

namespace {

constexpr std::size_t kReseedBlocks = 64;

double hsum(__m256d v) {
  const __m128d lo = _mm256_castpd256_pd128(v);
  const __m128d hi = _mm256_extractf128_pd(v, 1);
  const __m128d s = _mm_add_pd(lo, hi);
  return _mm_cvtsd_f64(_mm_add_sd(s, _mm_unpackhi_pd(s, s)));
}

}  // namespace

bool compiled() { return true; }

RotatingSum rotating_sum(std::span<const double> mag, double start, double step) {
  const std::size_t n = mag.size();
  const std::size_t nv = n / 4 * 4;
  const std::complex<double> rot4 = std::polar(1.0, 4.0 * step);
  const __m256d rr = _mm256_set1_pd(rot4.real());
  const __m256d ri = _mm256_set1_pd(rot4.imag());
  const __m256d sign_mask = _mm256_set1_pd(-0.0);
  __m256d wr = _mm256_setzero_pd(), wi = _mm256_setzero_pd();
  __m256d sr = _mm256_setzero_pd(), si = _mm256_setzero_pd(), sa = _mm256_setzero_pd();
  for (std::size_t j = 0, blk = 0; j < nv; j += 4, ++blk) {
    if (blk % kReseedBlocks == 0) {
      alignas(32) double re[4], im[4];
      for (int l = 0; l < 4; ++l) {
        const auto w = std::polar(1.0, start + static_cast<double>(j + l) * step);
        re[l] = w.real();
        im[l] = w.imag();
      }
      wr = _mm256_load_pd(re);
      wi = _mm256_load_pd(im);
    }
    const __m256d m = _mm256_loadu_pd(mag.data() + j);
    sr = _mm256_fmadd_pd(m, wr, sr);
    si = _mm256_fmadd_pd(m, wi, si);
    sa = _mm256_add_pd(sa, _mm256_andnot_pd(sign_mask, m));
    const __m256d nr = _mm256_fmsub_pd(wr, rr, _mm256_mul_pd(wi, ri));
    wi = _mm256_fmadd_pd(wr, ri, _mm256_mul_pd(wi, rr));
    wr = nr;
  }
  RotatingSum r;
  double re = hsum(sr), im = hsum(si);
  r.abs_sum = hsum(sa);
  for (std::size_t j = nv; j < n; ++j) {
    const auto w = std::polar(1.0, start + static_cast<double>(j) * step);
    re += mag[j] * w.real();
    im += mag[j] * w.imag();
    r.abs_sum += std::abs(mag[j]);
  }
  r.sum = {re, im};
  return r;
}

void cosine_series(std::span<const double> a, std::span<const double> b,
                   std::span<const double> theta, std::span<double> out) {
  const std::size_t nq = a.size();
  const std::size_t n = theta.size();
  const std::size_t nv = n / 4 * 4;
  for (std::size_t j = 0; j < nv; j += 4) {
    alignas(32) double c1a[4], s1a[4];
    for (int l = 0; l < 4; ++l) {
      c1a[l] = std::cos(theta[j + l]);
      s1a[l] = std::sin(theta[j + l]);
    }
    const __m256d c1 = _mm256_load_pd(c1a), s1 = _mm256_load_pd(s1a);
    __m256d c = _mm256_set1_pd(1.0), s = _mm256_setzero_pd(), acc = _mm256_setzero_pd();
    for (std::size_t q = 0; q < nq; ++q) {
      if (q % 64 == 0 && q > 0) {
        alignas(32) double ca[4], sa[4];
        for (int l = 0; l < 4; ++l) {
          ca[l] = std::cos(static_cast<double>(q) * theta[j + l]);
          sa[l] = std::sin(static_cast<double>(q) * theta[j + l]);
        }
        c = _mm256_load_pd(ca);
        s = _mm256_load_pd(sa);
      }
      acc = _mm256_fmadd_pd(_mm256_set1_pd(a[q]), c, acc);
      acc = _mm256_fnmadd_pd(_mm256_set1_pd(b[q]), s, acc);
      const __m256d cn = _mm256_fmsub_pd(c, c1, _mm256_mul_pd(s, s1));
      s = _mm256_fmadd_pd(s, c1, _mm256_mul_pd(c, s1));
      c = cn;
    }
    _mm256_storeu_pd(out.data() + j, acc);
  }
  if (nv < n) scalar::cosine_series(a, b, theta.subspan(nv), out.subspan(nv));
}

GridMoments grid_moments(std::span<const double> theta, std::span<const double> p) {
  const std::size_t n = theta.size();
  const std::size_t nv = n / 4 * 4;
  __m256d m0 = _mm256_setzero_pd(), m1 = _mm256_setzero_pd(), m2 = _mm256_setzero_pd();
  for (std::size_t j = 0; j < nv; j += 4) {
    const __m256d t = _mm256_loadu_pd(theta.data() + j);
    const __m256d v = _mm256_loadu_pd(p.data() + j);
    const __m256d tv = _mm256_mul_pd(t, v);
    m0 = _mm256_add_pd(m0, v);
    m1 = _mm256_add_pd(m1, tv);
    m2 = _mm256_fmadd_pd(t, tv, m2);
  }
  GridMoments g{hsum(m0), hsum(m1), hsum(m2)};
  for (std::size_t j = nv; j < n; ++j) {
    g.m0 += p[j];
    g.m1 += theta[j] * p[j];
    g.m2 += theta[j] * theta[j] * p[j];
  }
  return g;
}

#else

bool compiled() { return false; }

RotatingSum rotating_sum(std::span<const double> mag, double start, double step) {
  return scalar::rotating_sum(mag, start, step);
}

void cosine_series(std::span<const double> a, std::span<const double> b,
                   std::span<const double> theta, std::span<double> out) {
  scalar::cosine_series(a, b, theta, out);
}

GridMoments grid_moments(std::span<const double> theta, std::span<const double> p) {
  return scalar::grid_moments(theta, p);
}

#endif

const Backend& backend() {
  static const Backend b{"avx2", &rotating_sum, &cosine_series, &grid_moments};
  return b;
}

}  // namespace optocav::kernels::avx2
