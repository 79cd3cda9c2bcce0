#pragma once

// Data-parallel reductions behind the support-function numerics.
//
// Every kernel has a scalar reference implementation and, on x86-64, an
// AVX2+FMA variant. The active table is chosen once at first use from the
// CPU feature bits; ASA_SIMD=scalar in the environment forces the reference
// path. Variants agree to rounding (summation order differs).

#include <cstddef>
#include <span>
#include <string_view>

namespace asa::kernels {

/// Sums over a support grid for the polar area of K - p and its derivatives
/// in p. With d_k = h_k - c_k px - s_k py:
///   inv2 = sum d^-2, gx = sum c d^-3, gy = sum s d^-3,
///   hxx = sum c c d^-4, hxy = sum c s d^-4, hyy = sum s s d^-4,
///   min_d = min d.
struct PolarMoments {
  double inv2 = 0.0;
  double gx = 0.0;
  double gy = 0.0;
  double hxx = 0.0;
  double hxy = 0.0;
  double hyy = 0.0;
  double min_d = 0.0;
};

struct Table {
  std::string_view name;
  // max_i (c * xs[i] + s * ys[i]); n >= 1
  double (*support_max)(const double* xs, const double* ys, std::size_t n, double c, double s);
  // out[j] = max_i (cs[j] * xs[i] + ss[j] * ys[i])
  void (*support_grid)(const double* xs, const double* ys, std::size_t n, const double* cs,
                       const double* ss, std::size_t m, double* out);
  PolarMoments (*polar_moments)(const double* h, const double* cs, const double* ss, std::size_t m,
                                double px, double py);
  double (*max_abs_diff)(const double* a, const double* b, std::size_t n);
};

const Table& scalar_table();
#if defined(ASA_WITH_AVX2)
const Table& avx2_table();
#endif

/// Table in use for this process.
const Table& active();

/// True when the AVX2 variant is compiled in and the CPU supports it.
bool avx2_available();

inline double support_max(std::span<const double> xs, std::span<const double> ys, double c, double s) {
  return active().support_max(xs.data(), ys.data(), xs.size(), c, s);
}

inline PolarMoments polar_moments(std::span<const double> h, std::span<const double> cs,
                                  std::span<const double> ss, double px, double py) {
  return active().polar_moments(h.data(), cs.data(), ss.data(), h.size(), px, py);
}

inline double max_abs_diff(std::span<const double> a, std::span<const double> b) {
  return active().max_abs_diff(a.data(), b.data(), a.size());
}

}  // namespace asa::kernels
