#pragma once

// Bracketed one-dimensional solvers. Every quantity solved for in this
// library is monotone in its parameter, so a sign-changing bracket is always
// available and convergence is unconditional.

#include <cmath>
#include <utility>

namespace asa::roots {

/// Bisection on a predicate: returns the boundary between `lo` where
/// inside(lo) holds and `hi` where it fails. Stops when the bracket is below
/// abs_tol or can no longer be split in floating point.
template <class Pred>
std::pair<double, double> bisect_predicate(Pred&& inside, double lo, double hi, double abs_tol = 0.0,
                                           int max_iter = 200) {
  for (int i = 0; i < max_iter; ++i) {
    const double mid = 0.5 * (lo + hi);
    if (mid <= std::min(lo, hi) || mid >= std::max(lo, hi)) break;
    if (std::abs(hi - lo) <= abs_tol) break;
    if (inside(mid)) lo = mid;
    else hi = mid;
  }
  return {lo, hi};
}

/// Bisection for a root of f on [lo, hi] with f(lo), f(hi) of opposite sign.
template <class F>
double bisect(F&& f, double lo, double hi, double abs_tol = 0.0, int max_iter = 200) {
  const double flo = f(lo);
  if (flo == 0.0) return lo;
  const bool lo_neg = flo < 0.0;
  auto [a, b] = bisect_predicate([&](double x) { const double v = f(x); return lo_neg ? v < 0.0 : v > 0.0; },
                                 lo, hi, abs_tol, max_iter);
  return 0.5 * (a + b);
}

/// Illinois-modified regula falsi; keeps a sign-changing bracket at every
/// step so it cannot diverge, and falls back to a bisection step whenever the
/// secant stalls. Used for inner geometric solves on smooth arcs.
template <class F>
double illinois(F&& f, double a, double b, double abs_tol = 1e-15, int max_iter = 200) {
  double fa = f(a);
  double fb = f(b);
  if (fa == 0.0) return a;
  if (fb == 0.0) return b;
  int side = 0;
  for (int i = 0; i < max_iter; ++i) {
    double c = (a * fb - b * fa) / (fb - fa);
    const double lo = std::min(a, b), hi = std::max(a, b);
    if (!(c > lo && c < hi) || (i % 8 == 7)) c = 0.5 * (a + b);
    const double fc = f(c);
    if (fc == 0.0) return c;
    if ((fc < 0.0) == (fb < 0.0)) {
      b = c;
      fb = fc;
      if (side == -1) fa *= 0.5;
      side = -1;
    } else {
      a = c;
      fa = fc;
      if (side == 1) fb *= 0.5;
      side = 1;
    }
    if (std::abs(b - a) <= abs_tol * (1.0 + std::abs(c))) break;
  }
  return (std::abs(fa) < std::abs(fb)) ? a : b;
}

/// Newton's method kept inside a sign-changing bracket [a, b]; `fdf`
/// returns {f(x), f'(x)}. A step leaving the bracket (or a zero slope) is
/// replaced by bisection. Stops once |f| <= f_tol, the noise floor of f.
template <class F>
double newton_bracketed(F&& fdf, double a, double b, double x0, double abs_tol = 1e-15, double f_tol = 0.0,
                        int max_iter = 100) {
  auto [fa, da] = fdf(a);
  if (fa == 0.0) return a;
  const bool a_neg = fa < 0.0;
  double x = (x0 > std::min(a, b) && x0 < std::max(a, b)) ? x0 : 0.5 * (a + b);
  for (int i = 0; i < max_iter; ++i) {
    const auto [f, d] = fdf(x);
    if (std::abs(f) <= f_tol) return x;
    if ((f < 0.0) == a_neg) a = x;
    else b = x;
    double next = (d != 0.0) ? x - f / d : 0.5 * (a + b);
    if (!(next > std::min(a, b) && next < std::max(a, b))) next = 0.5 * (a + b);
    if (std::abs(next - x) <= abs_tol * (1.0 + std::abs(x)) || std::abs(b - a) <= abs_tol * (1.0 + std::abs(x))) {
      return next;
    }
    x = next;
  }
  return x;
}

/// Golden-section minimization of a unimodal function on [a, b].
template <class F>
double golden_min(F&& f, double a, double b, double abs_tol = 1e-12, int max_iter = 200) {
  const double g = 0.5 * (std::sqrt(5.0) - 1.0);
  double c = b - g * (b - a);
  double d = a + g * (b - a);
  double fc = f(c), fd = f(d);
  for (int i = 0; i < max_iter && std::abs(b - a) > abs_tol; ++i) {
    if (fc < fd) {
      b = d;
      d = c;
      fd = fc;
      c = b - g * (b - a);
      fc = f(c);
    } else {
      a = c;
      c = d;
      fc = fd;
      d = a + g * (b - a);
      fd = f(d);
    }
  }
  return 0.5 * (a + b);
}

}  // namespace asa::roots
