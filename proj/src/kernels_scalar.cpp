#include "asa/kernels.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace asa::kernels {
namespace {

double support_max_scalar(const double* xs, const double* ys, std::size_t n, double c, double s) {
  double best = -std::numeric_limits<double>::infinity();
  for (std::size_t i = 0; i < n; ++i) best = std::max(best, c * xs[i] + s * ys[i]);
  return best;
}

void support_grid_scalar(const double* xs, const double* ys, std::size_t n, const double* cs,
                         const double* ss, std::size_t m, double* out) {
  for (std::size_t j = 0; j < m; ++j) out[j] = support_max_scalar(xs, ys, n, cs[j], ss[j]);
}

PolarMoments polar_moments_scalar(const double* h, const double* cs, const double* ss, std::size_t m,
                                  double px, double py) {
  PolarMoments r;
  r.min_d = std::numeric_limits<double>::infinity();
  for (std::size_t k = 0; k < m; ++k) {
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

double max_abs_diff_scalar(const double* a, const double* b, std::size_t n) {
  double best = 0.0;
  for (std::size_t i = 0; i < n; ++i) best = std::max(best, std::abs(a[i] - b[i]));
  return best;
}

}  // namespace

const Table& scalar_table() {
  static const Table table{"scalar", support_max_scalar, support_grid_scalar, polar_moments_scalar,
                           max_abs_diff_scalar};
  return table;
}

}  // namespace asa::kernels
