#include "asa/engine.hpp"

#include <cmath>
#include <limits>

#include "asa/rootfind.hpp"

namespace asa {

double unit_ball_volume(int k) {
  return std::pow(kPi, 0.5 * k) / std::tgamma(0.5 * k + 1.0);
}

ConstantsTable constants(int n) {
  if (n < 2) throw Error(ErrorCode::DomainError, "dimension n must be at least 2");
  ConstantsTable c;
  c.n = n;
  c.ball_volume = unit_ball_volume(n);
  c.ball_volume_facet = unit_ball_volume(n - 1);
  const double p = 2.0 / (n + 1.0);
  c.c = 2.0 * std::pow(c.ball_volume_facet / (n + 1.0), p);
  c.d = 2.0 * std::pow(c.ball_volume_facet / (n * (n + 1.0)), p);
  c.e = 2.0 / std::pow(c.ball_volume, p);
  return c;
}

double family_constant(ConstructionKind kind) {
  static const ConstantsTable c2 = constants(2);
  switch (kind) {
    case ConstructionKind::Floating:
    case ConstructionKind::Convolution: return c2.c;
    case ConstructionKind::Santalo: return c2.e;
    case ConstructionKind::Illumination: return c2.d;
  }
  return 0.0;
}

AsaEstimate asa_direct(const ConvexBody& k) {
  AsaEstimate a;
  if (k.is_polygon()) return a;
  const auto& s = k.smooth();
  double sum = 0.0;
  for (double r : s.rho()) sum += std::cbrt(r * r);
  a.value = sum * s.step();
  return a;
}

namespace {

template <class F>
double simpson(F& f, double a, double b, double fa, double fm, double fb, double whole, double tol, int depth) {
  const double m = 0.5 * (a + b);
  const double lm = 0.5 * (a + m), rm = 0.5 * (m + b);
  const double flm = f(lm), frm = f(rm);
  const double left = (m - a) / 6.0 * (fa + 4.0 * flm + fm);
  const double right = (b - m) / 6.0 * (fm + 4.0 * frm + fb);
  const double diff = left + right - whole;
  if (depth <= 0 || std::abs(diff) <= 15.0 * tol) return left + right + diff / 15.0;
  return simpson(f, a, m, fa, flm, fm, left, 0.5 * tol, depth - 1) +
         simpson(f, m, b, fm, frm, fb, right, 0.5 * tol, depth - 1);
}

}  // namespace

double asa_adaptive(const SmoothBody& k, double tol) {
  auto f = [&](double th) { return std::cbrt(std::pow(k.jet(th).rho(), 2.0)); };
  constexpr int kPieces = 64;
  double total = 0.0;
  for (int i = 0; i < kPieces; ++i) {
    const double a = kTwoPi * i / kPieces, b = kTwoPi * (i + 1) / kPieces;
    const double fa = f(a), fb = f(b), fm = f(0.5 * (a + b));
    const double whole = (b - a) / 6.0 * (fa + 4.0 * fm + fb);
    total += simpson(f, a, b, fa, fm, fb, whole, tol / kPieces, 40);
  }
  return total;
}

std::vector<ConvergenceRow> convergence_rows(const ConvexBody& k, ConstructionKind kind,
                                             std::span<const double> schedule, std::size_t n) {
  std::vector<ConvergenceRow> rows;
  rows.reserve(schedule.size());
  for (double t : schedule) {
    ConvergenceRow r;
    r.t = t;
    r.gap = volume_gap(k, kind, t, n);
    r.ball_gap = ball_gap(kind, t);
    r.ratio = r.gap / r.ball_gap;
    r.estimate = family_constant(kind) * r.gap / std::pow(t, 2.0 / 3.0);
    rows.push_back(r);
  }
  return rows;
}

ConvergenceReport ratio_report(const std::vector<ConvergenceRow>& rows) {
  std::vector<double> ts, vs;
  for (const auto& r : rows) {
    ts.push_back(r.t);
    vs.push_back(r.ratio);
  }
  return make_report(std::move(ts), std::move(vs));
}

ConvergenceReport estimate_report(const std::vector<ConvergenceRow>& rows) {
  std::vector<double> ts, vs;
  for (const auto& r : rows) {
    ts.push_back(r.t);
    vs.push_back(r.estimate);
  }
  return make_report(std::move(ts), std::move(vs));
}

ConvergenceReport theorem3_ratio(const ConvexBody& k, ConstructionKind kind, std::span<const double> schedule,
                                 std::size_t n) {
  return ratio_report(convergence_rows(k, kind, schedule, n));
}

ConvergenceReport corollary4_estimate(const ConvexBody& k, ConstructionKind kind,
                                      std::span<const double> schedule, std::size_t n) {
  return estimate_report(convergence_rows(k, kind, schedule, n));
}

namespace {

// |x_t| for the floating body: the nearest crossing of a cut line with the
// ray through x, min over cut directions of a_t(phi) / <u(phi), x_hat>.
double floating_ray_radius(const ConvexBody& k, Point2 xhat, double normal_angle, double t) {
  auto crossing = [&](double phi) {
    const double c = dot(unit(phi), xhat);
    if (c < 0.1) return std::numeric_limits<double>::infinity();
    return cut_offset_for_area(k, phi, t) / c;
  };
  constexpr int kScan = 64;
  constexpr double kHalfWidth = 0.5;
  double best = std::numeric_limits<double>::infinity();
  double best_phi = normal_angle;
  for (int i = 0; i <= kScan; ++i) {
    const double phi = normal_angle - kHalfWidth + 2.0 * kHalfWidth * i / kScan;
    const double v = crossing(phi);
    if (v < best) {
      best = v;
      best_phi = phi;
    }
  }
  const double h = 2.0 * kHalfWidth / kScan;
  const double phi = roots::golden_min(crossing, best_phi - h, best_phi + h, 1e-10);
  return std::min(best, crossing(phi));
}

}  // namespace

double local_integrand(const ConvexBody& k, const BoundarySample& x, ConstructionKind kind, double t) {
  for (double h : support_grid(k)) {
    if (!(h > 0.0)) throw Error(ErrorCode::DomainError, "origin must be interior to K");
  }
  const double len = norm(x.point);
  const Point2 xhat = (1.0 / len) * x.point;
  double rt = 0.0;
  if (kind == ConstructionKind::Floating) {
    rt = floating_ray_radius(k, xhat, std::atan2(x.normal.y, x.normal.x), t);
  } else {
    rt = FamilyMembership(k, kind, t).exit_distance({0.0, 0.0}, xhat);
  }
  const double q = rt / len;
  return dot(x.point, x.normal) * std::abs(1.0 - q * q) / (2.0 * ball_gap(kind, t));
}

ConvergenceReport local_integrand_limit(const ConvexBody& k, const BoundarySample& x, ConstructionKind kind,
                                        std::span<const double> schedule) {
  std::vector<double> values;
  for (double t : schedule) values.push_back(local_integrand(k, x, kind, t));
  return make_report({schedule.begin(), schedule.end()}, std::move(values));
}

ConvergenceReport local_integrand_limit(const SmoothBody& k, double theta, ConstructionKind kind,
                                        std::span<const double> schedule) {
  const BoundarySample x{k.boundary_point(theta), unit(theta), 0.0};
  return local_integrand_limit(ConvexBody(k), x, kind, schedule);
}

}  // namespace asa
