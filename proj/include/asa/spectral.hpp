#pragma once

// Periodic spectral helpers for support-function grids.

#include <complex>
#include <cstddef>
#include <span>
#include <vector>

namespace asa::spectral {

/// In-place radix-2 FFT; size must be a power of two. The inverse is unscaled.
void fft(std::vector<std::complex<double>>& data, bool inverse);

bool is_power_of_two(std::size_t n);

/// Real Fourier coefficients of M equispaced samples on [0, 2pi):
///   f(t) = a[0] + sum_{k>=1} a[k] cos kt + b[k] sin kt,  k < M/2.
/// The Nyquist term is dropped.
struct Series {
  std::vector<double> a;
  std::vector<double> b;  // b[0] unused (0)

  std::size_t degree() const { return a.empty() ? 0 : a.size() - 1; }
};

Series analyze(std::span<const double> samples);

/// Evaluates the series (order 0) or its first / second derivative on an
/// M-point grid.
std::vector<double> synthesize(const Series& s, std::size_t m, int derivative);

/// Drops trailing harmonics whose magnitude is below rel_tol times the
/// largest coefficient.
void truncate(Series& s, double rel_tol);

/// Gauss-Legendre nodes and weights on [-1, 1].
struct GaussRule {
  std::vector<double> nodes;
  std::vector<double> weights;
};

const GaussRule& gauss_legendre(std::size_t n);

/// Composite Gauss-Legendre quadrature of f over [a, b] with panels no wider
/// than max_panel.
template <class F>
double integrate(F&& f, double a, double b, double max_panel = 0.05, std::size_t order = 16) {
  if (b <= a) return 0.0;
  const auto& rule = gauss_legendre(order);
  const auto panels = static_cast<std::size_t>((b - a) / max_panel) + 1;
  const double width = (b - a) / static_cast<double>(panels);
  double total = 0.0;
  for (std::size_t p = 0; p < panels; ++p) {
    const double lo = a + width * static_cast<double>(p);
    const double mid = lo + 0.5 * width;
    double acc = 0.0;
    for (std::size_t i = 0; i < rule.nodes.size(); ++i) acc += rule.weights[i] * f(mid + 0.5 * width * rule.nodes[i]);
    total += 0.5 * width * acc;
  }
  return total;
}

}  // namespace asa::spectral
