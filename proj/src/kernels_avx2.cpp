#include "asa/kernels.hpp"

#include <immintrin.h>

#include <algorithm>
#include <cmath>
#include <limits>

namespace asa::kernels {
namespace {

inline double hmax(__m256d v) {
  __m128d lo = _mm256_castpd256_pd128(v);
  __m128d hi = _mm256_extractf128_pd(v, 1);
  lo = _mm_max_pd(lo, hi);
  return std::max(_mm_cvtsd_f64(lo), _mm_cvtsd_f64(_mm_unpackhi_pd(lo, lo)));
}

inline double hmin(__m256d v) {
  __m128d lo = _mm256_castpd256_pd128(v);
  __m128d hi = _mm256_extractf128_pd(v, 1);
  lo = _mm_min_pd(lo, hi);
  return std::min(_mm_cvtsd_f64(lo), _mm_cvtsd_f64(_mm_unpackhi_pd(lo, lo)));
}

inline double hsum(__m256d v) {
  __m128d lo = _mm256_castpd256_pd128(v);
  __m128d hi = _mm256_extractf128_pd(v, 1);
  lo = _mm_add_pd(lo, hi);
  return _mm_cvtsd_f64(lo) + _mm_cvtsd_f64(_mm_unpackhi_pd(lo, lo));
}

double support_max_avx2(const double* xs, const double* ys, std::size_t n, double c, double s) {
  const __m256d vc = _mm256_set1_pd(c);
  const __m256d vs = _mm256_set1_pd(s);
  __m256d best = _mm256_set1_pd(-std::numeric_limits<double>::infinity());
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    const __m256d x = _mm256_loadu_pd(xs + i);
    const __m256d y = _mm256_loadu_pd(ys + i);
    best = _mm256_max_pd(best, _mm256_fmadd_pd(vc, x, _mm256_mul_pd(vs, y)));
  }
  double r = hmax(best);
  for (; i < n; ++i) r = std::max(r, std::fma(c, xs[i], s * ys[i]));
  return r;
}

void support_grid_avx2(const double* xs, const double* ys, std::size_t n, const double* cs,
                       const double* ss, std::size_t m, double* out) {
  for (std::size_t j = 0; j < m; ++j) out[j] = support_max_avx2(xs, ys, n, cs[j], ss[j]);
}

PolarMoments polar_moments_avx2(const double* h, const double* cs, const double* ss, std::size_t m,
                                double px, double py) {
  const __m256d vpx = _mm256_set1_pd(px);
  const __m256d vpy = _mm256_set1_pd(py);
  const __m256d one = _mm256_set1_pd(1.0);
  __m256d inv2 = _mm256_setzero_pd(), gx = inv2, gy = inv2, hxx = inv2, hxy = inv2, hyy = inv2;
  __m256d mind = _mm256_set1_pd(std::numeric_limits<double>::infinity());
  std::size_t k = 0;
  for (; k + 4 <= m; k += 4) {
    const __m256d c = _mm256_loadu_pd(cs + k);
    const __m256d s = _mm256_loadu_pd(ss + k);
    const __m256d d = _mm256_fnmadd_pd(s, vpy, _mm256_fnmadd_pd(c, vpx, _mm256_loadu_pd(h + k)));
    mind = _mm256_min_pd(mind, d);
    const __m256d i1 = _mm256_div_pd(one, d);
    const __m256d i2 = _mm256_mul_pd(i1, i1);
    const __m256d i3 = _mm256_mul_pd(i2, i1);
    const __m256d i4 = _mm256_mul_pd(i2, i2);
    inv2 = _mm256_add_pd(inv2, i2);
    gx = _mm256_fmadd_pd(c, i3, gx);
    gy = _mm256_fmadd_pd(s, i3, gy);
    const __m256d ci4 = _mm256_mul_pd(c, i4);
    hxx = _mm256_fmadd_pd(c, ci4, hxx);
    hxy = _mm256_fmadd_pd(s, ci4, hxy);
    hyy = _mm256_fmadd_pd(s, _mm256_mul_pd(s, i4), hyy);
  }
  PolarMoments r;
  r.inv2 = hsum(inv2);
  r.gx = hsum(gx);
  r.gy = hsum(gy);
  r.hxx = hsum(hxx);
  r.hxy = hsum(hxy);
  r.hyy = hsum(hyy);
  r.min_d = hmin(mind);
  for (; k < m; ++k) {
    const double d = h[k] - cs[k] * px - ss[k] * py;
    r.min_d = std::min(r.min_d, d);
    const double i1 = 1.0 / d;
    const double i2 = i1 * i1;
    const double i3 = i2 * i1;
    const double i4 = i2 * i2;
    r.inv2 += i2;
    r.gx += cs[k] * i3;
    r.gy += ss[k] * i3;
    r.hxx += cs[k] * cs[k] * i4;
    r.hxy += cs[k] * ss[k] * i4;
    r.hyy += ss[k] * ss[k] * i4;
  }
  return r;
}

double max_abs_diff_avx2(const double* a, const double* b, std::size_t n) {
  const __m256d sign = _mm256_set1_pd(-0.0);
  __m256d best = _mm256_setzero_pd();
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    const __m256d d = _mm256_sub_pd(_mm256_loadu_pd(a + i), _mm256_loadu_pd(b + i));
    best = _mm256_max_pd(best, _mm256_andnot_pd(sign, d));
  }
  double r = hmax(best);
  for (; i < n; ++i) r = std::max(r, std::abs(a[i] - b[i]));
  return r;
}

}  // namespace

const Table& avx2_table() {
  static const Table table{"avx2", support_max_avx2, support_grid_avx2, polar_moments_avx2,
                           max_abs_diff_avx2};
  return table;
}

}  // namespace asa::kernels
