#include "asa/ball.hpp"

#include <cmath>
#include <limits>

#include "asa/rootfind.hpp"

namespace asa {
namespace {

// x - sin x
double x_minus_sin(double x) {
  if (x > 0.1) return x - std::sin(x);
  const double x2 = x * x;
  double term = x * x2 / 6.0, sum = 0.0;
  for (int k = 1; k < 12; ++k) {
    sum += term;
    term *= -x2 / ((2.0 * k + 2.0) * (2.0 * k + 3.0));
  }
  return sum;
}

// sin x - x cos x
double sin_minus_x_cos(double x) {
  if (x > 0.1) return std::sin(x) - x * std::cos(x);
  // sum_{k>=1} (-1)^(k+1) 2k x^(2k+1) / (2k+1)!
  const double x2 = x * x;
  double pow_fact = x * x2 / 6.0;  // x^(2k+1)/(2k+1)! at k = 1
  double sum = 0.0;
  for (int k = 1; k < 12; ++k) {
    sum += ((k % 2) ? 1.0 : -1.0) * 2.0 * k * pow_fact;
    pow_fact *= x2 / ((2.0 * k + 2.0) * (2.0 * k + 3.0));
  }
  return sum;
}

// 2 sin^2(x/2) = 1 - cos x
double one_minus_cos(double x) {
  const double s = std::sin(0.5 * x);
  return 2.0 * s * s;
}

// Solves g(x) = target on [0, hi] for increasing g to full precision.
template <class G>
double solve_increasing(G&& g, double target, double hi) {
  auto [lo, up] = roots::bisect_predicate([&](double x) { return g(x) < target; }, 0.0, hi);
  return 0.5 * (lo + up);
}

void check(const BallCurve& c, double t) {
  if (!(t >= 0.0 && t < c.t_max)) throw Error(ErrorCode::DomainError, "t outside [0, t_max) for this ball curve");
}

}  // namespace

BallCurve ball_curve(ConstructionKind kind, double r) {
  if (!(r > 0.0)) throw Error(ErrorCode::DomainError, "ball radius must be positive");
  BallCurve c{kind, r, 0.0};
  switch (kind) {
    case ConstructionKind::Floating:
    case ConstructionKind::Convolution: c.t_max = 0.5 * kPi * r * r; break;
    case ConstructionKind::Santalo: c.t_max = r * r / kPi; break;
    case ConstructionKind::Illumination: c.t_max = std::numeric_limits<double>::infinity(); break;
  }
  return c;
}

double ball_deficit(const BallCurve& c, double t) {
  check(c, t);
  if (t == 0.0) return 0.0;
  const double r = c.r;
  const double u = t / (r * r);
  switch (c.kind) {
    case ConstructionKind::Floating:
    case ConstructionKind::Convolution: {
      // segment of half-angle phi: r^2 (2 phi - sin 2 phi) / 2 = t; f = r cos phi
      const double psi = solve_increasing(x_minus_sin, 2.0 * u, kPi);
      return r * one_minus_cos(0.5 * psi);
    }
    case ConstructionKind::Santalo: {
      const double q = std::cbrt(kPi * r * t) * std::cbrt(kPi * r * t);
      return q / (r + std::sqrt(std::max(0.0, r * r - q)));
    }
    case ConstructionKind::Illumination: {
      // tangent kite minus sector: r^2 (tan phi - phi) = t; f = r / cos phi
      const double phi = solve_increasing(
          [](double x) { return sin_minus_x_cos(x) / std::cos(x); }, u, 0.5 * kPi * (1.0 - 1e-16));
      return r * one_minus_cos(phi) / std::cos(phi);
    }
  }
  return 0.0;
}

double ball_radius(const BallCurve& c, double t) {
  const double d = ball_deficit(c, t);
  return orientation(c.kind) == Orientation::Inner ? c.r - d : c.r + d;
}

double ball_gap(const BallCurve& c, double t) {
  const double d = ball_deficit(c, t);
  return orientation(c.kind) == Orientation::Inner ? kPi * d * (2.0 * c.r - d) : kPi * d * (2.0 * c.r + d);
}

double ball_gap(ConstructionKind kind, double t) { return ball_gap(ball_curve(kind), t); }

double ball_limit_constant_exact(ConstructionKind kind) {
  switch (kind) {
    case ConstructionKind::Floating:
    case ConstructionKind::Convolution: return kTwoPi * std::pow(3.0 / (4.0 * std::sqrt(2.0)), 2.0 / 3.0);
    case ConstructionKind::Santalo: return std::pow(kPi, 5.0 / 3.0);
    case ConstructionKind::Illumination: return kPi * std::cbrt(9.0);
  }
  return 0.0;
}

Extrapolation ball_limit_constant(ConstructionKind kind) {
  std::vector<SchedulePoint> pts;
  for (double t : geometric_schedule(1e-3, 0.25, 8)) pts.push_back({t, ball_gap(kind, t) / std::pow(t, 2.0 / 3.0)});
  return extrapolate(pts);
}

ConvergenceReport remark2_scaling(ConstructionKind kind, double r, std::span<const double> schedule) {
  const BallCurve cr = ball_curve(kind, r);
  const BallCurve c1 = ball_curve(kind, 1.0);
  std::vector<double> values;
  for (double t : schedule) {
    if (!(t > 0.0)) throw Error(ErrorCode::DomainError, "schedule entries must be positive");
    values.push_back(ball_deficit(cr, t) / ball_deficit(c1, t));
  }
  return make_report({schedule.begin(), schedule.end()}, std::move(values));
}

}  // namespace asa
