#include "asa/constructions.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>
#include <vector>

#include "asa/halfplane.hpp"
#include "asa/rootfind.hpp"

namespace asa {

std::string_view to_string(ConstructionKind k) {
  switch (k) {
    case ConstructionKind::Floating: return "floating";
    case ConstructionKind::Convolution: return "convolution";
    case ConstructionKind::Santalo: return "santalo";
    case ConstructionKind::Illumination: return "illumination";
  }
  return "unknown";
}

ConstructionKind parse_kind(std::string_view name) {
  for (auto k : kAllKinds) {
    if (to_string(k) == name) return k;
  }
  throw Error(ErrorCode::ParseError, "unknown construction kind '" + std::string(name) + "'");
}

const Polygon& FamilyResult::polygon() const {
  if (!body) throw Error(ErrorCode::EmptyBody, "degenerate family member has no polygon");
  return *body;
}

namespace {

double direction(std::size_t i, std::size_t n) { return kTwoPi * static_cast<double>(i) / static_cast<double>(n); }

void require_n(std::size_t n) {
  if (n < 3) throw Error(ErrorCode::DomainError, "direction count N must be at least 3");
}

FamilyResult identity_result(const ConvexBody& k, ConstructionKind kind, std::size_t n) {
  FamilyResult r;
  r.body = discretize(k);
  r.kind = kind;
  r.resolution = n;
  r.origin = construction_origin(k, kind);
  return r;
}

void measure_containment(const ConvexBody& k, FamilyResult& r) {
  if (!r.body) return;
  r.containment_excess = orientation(r.kind) == Orientation::Inner ? support_excess(*r.body, k)
                                                                    : support_excess(k, *r.body);
}

Point2 symmetry_center(const ConvexBody& k) {
  Point2 c;
  if (!is_symmetric(k, &c)) throw Error(ErrorCode::NotSymmetric, "hausdorff_distance(K - c, c - K) >= 1e-9");
  return c;
}

// Boundary points of a star-shaped region about `o`, one per direction.
std::vector<Point2> ray_points(Point2 o, const std::vector<double>& radii) {
  std::vector<Point2> pts(radii.size());
  for (std::size_t i = 0; i < radii.size(); ++i) pts[i] = o + radii[i] * unit(direction(i, radii.size()));
  return pts;
}

// Polygon through ray points; coincident or collinear points are dropped by
// the polygon constructor, so a hull pass only runs when that fails.
Polygon star_polygon(std::vector<Point2> pts) {
  try {
    return Polygon(pts);
  } catch (const Error&) {
    return Polygon::hull(std::move(pts));
  }
}

// Adaptive angular sampling used for polygon inputs, whose family members
// have corners much sharper than a uniform N-direction grid resolves. An
// interval is split while the triangle a midpoint sample adds or removes
// exceeds `area_tol`.
constexpr int kMaxRefineDepth = 48;

// Gaps of polygon families are at least of order t, so 1e-6 t per interval
// keeps the summed error far below them.
double refine_tolerance(const ConvexBody& k, double t) { return std::max(1e-14 * area(k), 1e-6 * t); }

template <class Radius>
void refine_rays(Point2 o, double ta, Point2 pa, double tb, Point2 pb, Radius&& radius, double area_tol, int depth,
                 std::vector<Point2>& out) {
  if (depth >= kMaxRefineDepth) return;
  const double tm = 0.5 * (ta + tb);
  const Point2 pm = o + radius(tm) * unit(tm);
  if (std::abs(0.5 * cross(pb - pa, pm - pa)) <= area_tol) return;
  refine_rays(o, ta, pa, tm, pm, radius, area_tol, depth + 1, out);
  out.push_back(pm);
  refine_rays(o, tm, pm, tb, pb, radius, area_tol, depth + 1, out);
}

// Ray points of a star-shaped region about `o` at N uniform directions,
// refined adaptively when `adaptive` is set.
template <class Radius>
std::vector<Point2> sample_rays(Point2 o, std::size_t n, Radius&& radius, bool adaptive, double area_tol) {
  std::vector<double> r(n);
  for (std::size_t i = 0; i < n; ++i) r[i] = radius(direction(i, n));
  std::vector<Point2> pts;
  pts.reserve(n);
  for (std::size_t i = 0; i < n; ++i) {
    const double ta = direction(i, n), tb = direction(i + 1, n);
    const Point2 pa = o + r[i] * unit(ta);
    pts.push_back(pa);
    if (adaptive) refine_rays(o, ta, pa, tb, o + r[(i + 1) % n] * unit(tb), radius, area_tol, 0, pts);
  }
  return pts;
}

Point2 meet(const hp::Line& a, const hp::Line& b) {
  const double det = cross(a.n, b.n);
  return {(a.b * b.n.y - a.n.y * b.b) / det, (a.n.x * b.b - a.b * b.n.x) / det};
}

// Cut lines between two consecutive directions, added while the middle
// cut would shave more than area_tol off the wedge the outer two leave.
template <class Offset>
void refine_cuts(const hp::Line& a, const hp::Line& b, Offset&& offset, double area_tol, int depth,
                 std::vector<hp::Line>& out) {
  if (depth >= kMaxRefineDepth || cross(a.n, b.n) <= 0.0) return;
  const double tm = a.angle + 0.5 * std::remainder(b.angle - a.angle, kTwoPi);
  const hp::Line m = hp::Line::from(tm, offset(tm));
  const Point2 v = meet(a, b);
  if (dot(m.n, v) <= m.b) return;
  const Point2 pa = meet(m, a), pb = meet(m, b);
  if (std::abs(0.5 * cross(pa - v, pb - v)) <= area_tol) return;
  out.push_back(m);
  refine_cuts(a, m, offset, area_tol, depth + 1, out);
  refine_cuts(m, b, offset, area_tol, depth + 1, out);
}

}  // namespace

// ---- Santalo point -------------------------------------------------------

Point2 santalo_point(const ConvexBody& k) {
  Point2 x = centroid(k);
  PolarValue pv = polar_value(k, x);
  for (int it = 0; it < 100; ++it) {
    const auto& hs = pv.hessian;
    const double det = hs[0] * hs[2] - hs[1] * hs[1];
    Point2 step;
    if (det > 0.0 && hs[0] > 0.0) {
      step = {-(hs[2] * pv.gradient.x - hs[1] * pv.gradient.y) / det,
              -(-hs[1] * pv.gradient.x + hs[0] * pv.gradient.y) / det};
    } else {
      step = -(1.0 / std::max(hs[0] + hs[2], 1e-300)) * pv.gradient;
    }
    double lambda = 1.0;
    bool moved = false;
    for (int ls = 0; ls < 60; ++ls, lambda *= 0.5) {
      const Point2 y = x + lambda * step;
      try {
        const PolarValue pw = polar_value(k, y);
        if (pw.value <= pv.value) {
          moved = norm(y - x) > 0.0;
          x = y;
          pv = pw;
          break;
        }
      } catch (const Error& e) {
        if (e.code() != ErrorCode::OutsideBody) throw;
      }
    }
    if (!moved || norm(lambda * step) <= 1e-14 * (1.0 + norm(x))) break;
  }
  return x;
}

Point2 construction_origin(const ConvexBody& k, ConstructionKind kind) {
  switch (kind) {
    case ConstructionKind::Floating: return {};
    case ConstructionKind::Convolution: return symmetry_center(k);
    case ConstructionKind::Santalo: return santalo_point(k);
    case ConstructionKind::Illumination: return centroid(k);
  }
  return {};
}

// ---- families ------------------------------------------------------------

FamilyResult floating_body(const ConvexBody& k, double t, std::size_t n) {
  require_n(n);
  const double full = area(k);
  if (!(t >= 0.0 && t < 0.5 * full)) throw Error(ErrorCode::DomainError, "floating body needs 0 <= t < |K|/2");
  if (t == 0.0) return identity_result(k, ConstructionKind::Floating, n);
  FamilyResult r;
  r.kind = ConstructionKind::Floating;
  r.t = t;
  r.resolution = n;
  r.tolerance = 1e-12 * full;
  auto offset = [&](double th) {
    const double a = cut_offset_for_area(k, th, t);
    r.residual = std::max(r.residual, std::abs(cut_area(k, th, a) - t));
    return a;
  };
  std::vector<hp::Line> lines;
  lines.reserve(n + (k.is_polygon() ? k.polygon().size() : 0));
  for (std::size_t i = 0; i < n; ++i) lines.push_back(hp::Line::from(direction(i, n), offset(direction(i, n))));
  if (k.is_polygon()) {
    const double tol = refine_tolerance(k, t);
    const std::vector<hp::Line> base(lines);
    for (std::size_t i = 0; i < n; ++i) refine_cuts(base[i], base[(i + 1) % n], offset, tol, 0, lines);
  }
  if (k.is_polygon()) {
    for (const auto& l : hp::edges(k.polygon())) lines.push_back(l);
  }
  auto pts = hp::intersect(std::move(lines));
  if (!pts) throw Error(ErrorCode::EmptyBody, "halfplane intersection of the cuts is empty");
  // Nearly parallel refined cuts meet with ~1e-10 rounding, enough to flip a
  // vertex reflex; the hull absorbs that.
  r.body = Polygon::hull(std::move(*pts));
  r.origin = r.body->centroid();
  measure_containment(k, r);
  return r;
}

FamilyResult convolution_body(const ConvexBody& k, double t, std::size_t n) {
  require_n(n);
  const Point2 c = symmetry_center(k);
  const double full = area(k);
  if (!(t >= 0.0 && t < 0.5 * full)) throw Error(ErrorCode::DomainError, "convolution body needs 0 <= t < |K|/2");
  if (t == 0.0) return identity_result(k, ConstructionKind::Convolution, n);
  FamilyResult r;
  r.kind = ConstructionKind::Convolution;
  r.t = t;
  r.resolution = n;
  r.origin = c;
  r.tolerance = 1e-9 * full;
  double prev = NAN;  // the radius of the previous ray starts the next solve
  auto radius = [&](double th) {
    const Point2 v = unit(th);
    auto f = [&](double s) { return overlap_area(k, 2.0 * s * v, c) - 2.0 * t; };
    const double reach = radial_distance(k, c, v);
    double s = 0.0;
    if (k.is_smooth()) {
      // the overlap vanishes like (reach - s)^{3/2}; its 2/3 power is close
      // to linear, which suits Newton
      const double target = std::cbrt(4.0 * t * t);
      auto fdf = [&](double s) {
        const auto o = symmetric_overlap_slope(k.smooth(), 2.0 * s * v, c);
        const double p = std::cbrt(o.area * o.area);
        const double dp = o.area > 0.0 ? (2.0 / 3.0) * p / o.area * 2.0 * dot(o.gradient, v) : 0.0;
        return std::pair{p - target, dp};
      };
      // overlap areas carry ~1e-14 |K| of cancellation noise
      const double f_tol = (2.0 / 3.0) * target * 1e-14 * full / (2.0 * t);
      s = roots::newton_bracketed(fdf, 0.0, reach, std::isnan(prev) ? 0.9 * reach : prev, 1e-15, f_tol);
      prev = s;
    } else {
      s = roots::illinois(f, 0.0, reach, 1e-15);
    }
    r.residual = std::max(r.residual, std::abs(f(s)));
    return s;
  };
  r.body = star_polygon(sample_rays(c, n, radius, k.is_polygon(), refine_tolerance(k, t)));
  measure_containment(k, r);
  return r;
}

FamilyResult santalo_region(const ConvexBody& k, double t, std::size_t n) {
  require_n(n);
  if (!(t >= 0.0)) throw Error(ErrorCode::DomainError, "Santalo region needs t >= 0");
  if (t == 0.0) return identity_result(k, ConstructionKind::Santalo, n);
  FamilyResult r;
  r.kind = ConstructionKind::Santalo;
  r.t = t;
  r.resolution = n;
  const Point2 o = santalo_point(k);
  r.origin = o;
  const double level = 1.0 / t;
  r.tolerance = 1e-9 * level;
  if (polar_area_about(k, o) > level * (1.0 + 1e-10)) {
    throw Error(ErrorCode::EmptyRegion, "min_x |K^x| exceeds 1/t");
  }
  double largest = 0.0;
  auto radius = [&](double th) {
    const Point2 v = unit(th);
    const double reach = radial_distance(k, o, v);
    auto inside = [&](double s) {
      if (s >= reach) return false;
      try {
        return polar_area_about(k, o + s * v) <= level;
      } catch (const Error& e) {
        if (e.code() != ErrorCode::OutsideBody) throw;
        return false;
      }
    };
    const double s = roots::bisect_predicate(inside, 0.0, reach).first;
    largest = std::max(largest, s);
    if (s > 0.0) r.residual = std::max(r.residual, std::abs(polar_area_about(k, o + s * v) - level));
    return s;
  };
  auto pts = sample_rays(o, n, radius, k.is_polygon(), refine_tolerance(k, t));
  if (largest < 1e-6) {
    r.degenerate = true;
    return r;
  }
  try {
    r.body = star_polygon(std::move(pts));
  } catch (const Error&) {
    r.degenerate = true;
    return r;
  }
  measure_containment(k, r);
  return r;
}

FamilyResult illumination_body(const ConvexBody& k, double t, std::size_t n) {
  require_n(n);
  if (!(t >= 0.0)) throw Error(ErrorCode::DomainError, "illumination body needs t >= 0");
  if (t == 0.0) return identity_result(k, ConstructionKind::Illumination, n);
  FamilyResult r;
  r.kind = ConstructionKind::Illumination;
  r.t = t;
  r.resolution = n;
  const Point2 o = centroid(k);
  r.origin = o;
  r.tolerance = 1e-9 * std::max(t, 1e-300) + 1e-15 * area(k);
  auto radius = [&](double th) {
    const Point2 v = unit(th);
    const double reach = radial_distance(k, o, v);
    auto f = [&](double s) { return illuminated_area(k, o + s * v) - t; };
    double hi = 2.0 * reach;
    while (f(hi) <= 0.0) {
      hi *= 2.0;
      if (hi > 1e6) throw Error(ErrorCode::BracketError, "no distance <= 1e6 attains the illuminated area t");
    }
    const double s = roots::illinois(f, reach, hi, 1e-15);
    r.residual = std::max(r.residual, std::abs(f(s)));
    return s;
  };
  auto pts = sample_rays(o, n, radius, k.is_polygon(), refine_tolerance(k, t));
  if (k.is_polygon()) {
    for (const auto& p : k.polygon().vertices()) pts.push_back(p);
    r.body = Polygon::hull(std::move(pts));
  } else {
    r.body = star_polygon(std::move(pts));
  }
  measure_containment(k, r);
  return r;
}

FamilyResult construct(const ConvexBody& k, ConstructionKind kind, double t, std::size_t n) {
  FamilyResult r;
  switch (kind) {
    case ConstructionKind::Floating: r = floating_body(k, t, n); break;
    case ConstructionKind::Convolution: r = convolution_body(k, t, n); break;
    case ConstructionKind::Santalo: r = santalo_region(k, t, n); break;
    case ConstructionKind::Illumination: r = illumination_body(k, t, n); break;
  }
  r.t = t;
  return r;
}

Polygon reference_polygon(const ConvexBody& k, ConstructionKind kind, std::size_t n) {
  require_n(n);
  // polygon inputs are sampled adaptively down to round-off; K is its own reference
  if (k.is_polygon()) return k.polygon();
  if (kind == ConstructionKind::Floating) {
    std::vector<hp::Line> lines;
    for (std::size_t i = 0; i < n; ++i) lines.push_back(hp::Line::from(direction(i, n), support(k, direction(i, n))));
    auto pts = hp::intersect(std::move(lines));
    if (!pts) throw Error(ErrorCode::EmptyBody, "reference polygon is empty");
    return Polygon::hull(std::move(*pts));
  }
  const Point2 o = construction_origin(k, kind);
  std::vector<double> radii(n);
  for (std::size_t i = 0; i < n; ++i) radii[i] = radial_distance(k, o, unit(direction(i, n)));
  return star_polygon(ray_points(o, radii));
}

double volume_gap(const ConvexBody& k, ConstructionKind kind, double t, std::size_t n) {
  if (t == 0.0) {
    construct(k, kind, t, n);  // validates preconditions
    return 0.0;
  }
  const auto r = construct(k, kind, t, n);
  const double ref = reference_polygon(k, kind, n).area();
  const double body = r.degenerate ? 0.0 : r.polygon().area();
  const double gap = orientation(kind) == Orientation::Inner ? ref - body : body - ref;
  // The sampling scales both areas by nearly the same factor (exactly for
  // disks), so the relative gap against the exact |K| cancels it.
  return k.is_polygon() ? gap : area(k) * gap / ref;
}

// ---- pointwise membership ------------------------------------------------

FamilyMembership::FamilyMembership(const ConvexBody& k, ConstructionKind kind, double t)
    : k_(k), kind_(kind), t_(t) {
  if (kind == ConstructionKind::Convolution) center_ = symmetry_center(k);
}

bool FamilyMembership::contains(Point2 x) const {
  switch (kind_) {
    case ConstructionKind::Floating: {
      // every line through x cuts off at least t on its far side
      auto cut = [&](double th) { return cut_area(k_, th, dot(unit(th), x)); };
      constexpr int kScan = 256;
      double best = std::numeric_limits<double>::infinity();
      double best_th = 0.0;
      for (int i = 0; i < kScan; ++i) {
        const double th = kTwoPi * i / kScan;
        const double v = cut(th);
        if (v < best) {
          best = v;
          best_th = th;
        }
      }
      const double h = kTwoPi / kScan;
      const double th = roots::golden_min(cut, best_th - h, best_th + h, 1e-12);
      return std::min(best, cut(th)) >= t_;
    }
    case ConstructionKind::Convolution:
      return overlap_area(k_, 2.0 * (x - center_), center_) >= 2.0 * t_;
    case ConstructionKind::Santalo:
      try {
        return t_ == 0.0 || polar_area_about(k_, x) <= 1.0 / t_;
      } catch (const Error& e) {
        if (e.code() != ErrorCode::OutsideBody) throw;
        return false;
      }
    case ConstructionKind::Illumination:
      return illuminated_area(k_, x) <= t_;
  }
  return false;
}

double FamilyMembership::exit_distance(Point2 from, Point2 dir) const {
  double hi = 1.0;
  for (double r = radial_distance(k_, from, dir); r > 0.0 && hi < 2.0 * r;) hi *= 2.0;
  while (contains(from + hi * dir)) {
    hi *= 2.0;
    if (hi > 1e6) throw Error(ErrorCode::BracketError, "membership ray does not exit within 1e6");
  }
  auto [lo, up] = roots::bisect_predicate([&](double s) { return contains(from + s * dir); }, 0.0, hi);
  return 0.5 * (lo + up);
}

}  // namespace asa
