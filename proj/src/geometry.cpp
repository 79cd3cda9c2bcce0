#include "asa/geometry.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "asa/halfplane.hpp"
#include "asa/kernels.hpp"
#include "asa/rootfind.hpp"

namespace asa {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::InvalidBody: return "InvalidBody";
    case ErrorCode::EmptyIntersection: return "EmptyIntersection";
    case ErrorCode::DomainError: return "DomainError";
    case ErrorCode::OutsideBody: return "OutsideBody";
    case ErrorCode::SingularMap: return "SingularMap";
    case ErrorCode::NotSymmetric: return "NotSymmetric";
    case ErrorCode::EmptyBody: return "EmptyBody";
    case ErrorCode::EmptyRegion: return "EmptyRegion";
    case ErrorCode::BracketError: return "BracketError";
    case ErrorCode::OriginOutside: return "OriginOutside";
    case ErrorCode::NotNested: return "NotNested";
    case ErrorCode::NotContainingUnitBall: return "NotContainingUnitBall";
    case ErrorCode::ParseError: return "ParseError";
  }
  return "Unknown";
}

double wrap_angle(double theta) {
  double r = std::fmod(theta, kTwoPi);
  if (r < 0.0) r += kTwoPi;
  if (r >= kTwoPi) r = 0.0;
  return r;
}

// ---- AffineMap2 ----------------------------------------------------------

AffineMap2::AffineMap2(double a11, double a12, double a21, double a22, Point2 shift)
    : m_{a11, a12, a21, a22}, shift_(shift), det_(a11 * a22 - a12 * a21) {
  if (!(std::abs(det_) >= 1e-12)) throw Error(ErrorCode::SingularMap, "|det A| < 1e-12");
}

AffineMap2 AffineMap2::rotation(double angle) {
  const double c = std::cos(angle), s = std::sin(angle);
  return {c, -s, s, c};
}

AffineMap2 AffineMap2::compose(const AffineMap2& in) const {
  const auto& a = m_;
  const auto& b = in.m_;
  return {a[0] * b[0] + a[1] * b[2], a[0] * b[1] + a[1] * b[3], a[2] * b[0] + a[3] * b[2],
          a[2] * b[1] + a[3] * b[3], apply(in.shift_)};
}

AffineMap2 AffineMap2::inverse() const {
  const double id = 1.0 / det_;
  const double i11 = m_[3] * id, i12 = -m_[1] * id, i21 = -m_[2] * id, i22 = m_[0] * id;
  const Point2 s{-(i11 * shift_.x + i12 * shift_.y), -(i21 * shift_.x + i22 * shift_.y)};
  return {i11, i12, i21, i22, s};
}

// ---- Polygon -------------------------------------------------------------

Polygon::Polygon(std::vector<Point2> vertices) {
  for (const auto& p : vertices) {
    if (!std::isfinite(p.x) || !std::isfinite(p.y)) throw Error(ErrorCode::InvalidBody, "finite coordinates");
  }
  double scale = 0.0;
  for (const auto& p : vertices) scale = std::max({scale, std::abs(p.x), std::abs(p.y)});
  if (vertices.size() >= 3 && hp::shoelace(vertices) <= 0.0) {
    throw Error(ErrorCode::InvalidBody, "counterclockwise orientation: signed shoelace area > 0");
  }
  {
    std::vector<Point2> unique;
    unique.reserve(vertices.size());
    for (const auto& p : vertices) {
      if (unique.empty() || norm(p - unique.back()) > 1e-14 * scale) unique.push_back(p);
    }
    while (unique.size() > 1 && norm(unique.back() - unique.front()) <= 1e-14 * scale) unique.pop_back();
    vertices.swap(unique);
  }
  // drop (near-)collinear vertices until every turn is strict
  bool changed = true;
  while (changed && vertices.size() >= 3) {
    changed = false;
    std::vector<Point2> kept;
    kept.reserve(vertices.size());
    const std::size_t n = vertices.size();
    for (std::size_t i = 0; i < n; ++i) {
      const Point2 prev = kept.empty() ? vertices[(i + n - 1) % n] : kept.back();
      const Point2 cur = vertices[i];
      const Point2 next = vertices[(i + 1) % n];
      const Point2 chord = next - prev;
      const double len = norm(chord);
      if (len <= 1e-14 * scale) {
        changed = true;
        continue;
      }
      // distance of cur outside the chord prev -> next; negative is reflex
      const double bulge = cross(cur - prev, chord) / len;
      if (bulge <= 1e-13 * scale) {
        if (bulge < -1e-9 * scale) throw Error(ErrorCode::InvalidBody, "strict convexity: reflex vertex");
        changed = true;
        continue;
      }
      kept.push_back(cur);
    }
    vertices.swap(kept);
  }
  if (vertices.size() < 3) throw Error(ErrorCode::InvalidBody, "at least 3 vertices");
  if (hp::shoelace(vertices) <= 0.0) throw Error(ErrorCode::InvalidBody, "signed shoelace area > 0");
  v_ = std::move(vertices);
  xs_.reserve(v_.size());
  ys_.reserve(v_.size());
  for (const auto& p : v_) {
    xs_.push_back(p.x);
    ys_.push_back(p.y);
  }
}

Polygon Polygon::hull(std::vector<Point2> pts) {
  std::sort(pts.begin(), pts.end(), [](Point2 a, Point2 b) { return a.x < b.x || (a.x == b.x && a.y < b.y); });
  pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
  if (pts.size() < 3) throw Error(ErrorCode::InvalidBody, "hull of fewer than 3 distinct points");
  std::vector<Point2> h(2 * pts.size());
  std::size_t k = 0;
  for (std::size_t i = 0; i < pts.size(); ++i) {
    while (k >= 2 && cross(h[k - 1] - h[k - 2], pts[i] - h[k - 2]) <= 0.0) --k;
    h[k++] = pts[i];
  }
  for (std::size_t i = pts.size() - 1, t = k + 1; i > 0; --i) {
    while (k >= t && cross(h[k - 1] - h[k - 2], pts[i - 1] - h[k - 2]) <= 0.0) --k;
    h[k++] = pts[i - 1];
  }
  h.resize(k - 1);
  return Polygon(std::move(h));
}

Polygon Polygon::regular(std::size_t n, double radius, Point2 center, double phase) {
  std::vector<Point2> v(n);
  for (std::size_t i = 0; i < n; ++i) v[i] = center + radius * unit(phase + kTwoPi * static_cast<double>(i) / static_cast<double>(n));
  return Polygon(std::move(v));
}

Polygon Polygon::box(double x0, double y0, double x1, double y1) {
  return Polygon({{x0, y0}, {x1, y0}, {x1, y1}, {x0, y1}});
}

double Polygon::area() const { return hp::shoelace(v_); }

double Polygon::perimeter() const {
  double s = 0.0;
  for (std::size_t i = 0; i < v_.size(); ++i) s += norm(v_[(i + 1) % v_.size()] - v_[i]);
  return s;
}

Point2 Polygon::centroid() const {
  const Point2 o = v_[0];
  double a = 0.0, cx = 0.0, cy = 0.0;
  for (std::size_t i = 1; i + 1 < v_.size(); ++i) {
    const Point2 p = v_[i] - o, q = v_[i + 1] - o;
    const double w = cross(p, q);
    a += w;
    cx += w * (p.x + q.x);
    cy += w * (p.y + q.y);
  }
  return o + Point2{cx / (3.0 * a), cy / (3.0 * a)};
}

double Polygon::support(double theta) const {
  return kernels::support_max(xs_, ys_, std::cos(theta), std::sin(theta));
}

Halfplane Polygon::edge_halfplane(std::size_t i) const {
  const Point2 a = v_[i], b = v_[(i + 1) % v_.size()];
  const Point2 d = b - a;
  const double len = norm(d);
  const Point2 n{d.y / len, -d.x / len};
  Halfplane h;
  h.normal_angle = wrap_angle(std::atan2(n.y, n.x));
  h.offset = dot(n, a);
  return h;
}

// ---- SmoothBody ----------------------------------------------------------

SmoothBody SmoothBody::from_samples(std::vector<double> h) {
  const std::size_t m = h.size();
  if (m < 16 || !spectral::is_power_of_two(m)) {
    throw Error(ErrorCode::InvalidBody, "grid_size must be a power of two >= 16");
  }
  for (double v : h) {
    if (!std::isfinite(v)) throw Error(ErrorCode::InvalidBody, "finite support samples");
  }
  SmoothBody b;
  b.series_ = spectral::analyze(h);
  // FFT round-off leaves a floor near 1e-15 of the largest coefficient
  spectral::truncate(b.series_, 2e-15);
  b.h_ = spectral::synthesize(b.series_, m, 0);
  b.dh_ = spectral::synthesize(b.series_, m, 1);
  const auto d2 = spectral::synthesize(b.series_, m, 2);
  b.rho_.resize(m);
  b.cos_.resize(m);
  b.sin_.resize(m);
  for (std::size_t k = 0; k < m; ++k) {
    const double th = kTwoPi * static_cast<double>(k) / static_cast<double>(m);
    b.cos_[k] = std::cos(th);
    b.sin_[k] = std::sin(th);
    b.rho_[k] = b.h_[k] + d2[k];
    if (!(b.h_[k] > 0.0)) throw Error(ErrorCode::InvalidBody, "origin_inside: h(theta_k) > 0 at every grid angle");
    if (!(b.rho_[k] > 0.0)) throw Error(ErrorCode::InvalidBody, "strict convexity: rho = h + h'' > 0 at every grid angle");
  }
  std::vector<double> rh(m);
  for (std::size_t k = 0; k < m; ++k) rh[k] = b.rho_[k] * b.h_[k];
  b.sweep_ = spectral::analyze(rh);
  spectral::truncate(b.sweep_, 2e-15);
  return b;
}

SmoothBody SmoothBody::from_fourier(double constant, std::span<const double> cos_coeffs,
                                    std::span<const double> sin_coeffs, std::size_t grid) {
  const std::size_t deg = std::max(cos_coeffs.size(), sin_coeffs.size());
  if (grid < 16 || !spectral::is_power_of_two(grid)) {
    throw Error(ErrorCode::InvalidBody, "grid_size must be a power of two >= 16");
  }
  if (deg >= grid / 2) throw Error(ErrorCode::InvalidBody, "Fourier degree must be below grid/2");
  return from_function(
      [&](double th) {
        double v = constant;
        for (std::size_t k = 0; k < cos_coeffs.size(); ++k) v += cos_coeffs[k] * std::cos(static_cast<double>(k + 1) * th);
        for (std::size_t k = 0; k < sin_coeffs.size(); ++k) v += sin_coeffs[k] * std::sin(static_cast<double>(k + 1) * th);
        return v;
      },
      grid);
}

SmoothBody SmoothBody::disk(double radius, Point2 center, std::size_t grid) {
  const double c[] = {center.x};
  const double s[] = {center.y};
  return from_fourier(radius, c, s, grid);
}

SmoothBody SmoothBody::ellipse(double a, double b, std::size_t grid) {
  return from_function([&](double th) { return std::hypot(a * std::cos(th), b * std::sin(th)); }, grid);
}

SupportJet SmoothBody::jet(double theta) const {
  const auto& a = series_.a;
  const auto& b = series_.b;
  SupportJet j;
  j.h = a[0];
  const double c1 = std::cos(theta), s1 = std::sin(theta);
  double c = 1.0, s = 0.0;
  for (std::size_t k = 1; k < a.size(); ++k) {
    if ((k & 31) == 0) {
      c = std::cos(static_cast<double>(k) * theta);
      s = std::sin(static_cast<double>(k) * theta);
    } else {
      const double cn = c * c1 - s * s1;
      s = s * c1 + c * s1;
      c = cn;
    }
    const double kk = static_cast<double>(k);
    const double v = a[k] * c + b[k] * s;
    j.h += v;
    j.dh += kk * (b[k] * c - a[k] * s);
    j.d2h -= kk * kk * v;
  }
  return j;
}

double SmoothBody::sector(double phi) const {
  const auto& a = sweep_.a;
  const auto& b = sweep_.b;
  double v = a[0] * phi;
  const double c1 = std::cos(phi), s1 = std::sin(phi);
  double c = 1.0, s = 0.0;
  for (std::size_t k = 1; k < a.size(); ++k) {
    if ((k & 31) == 0) {
      c = std::cos(static_cast<double>(k) * phi);
      s = std::sin(static_cast<double>(k) * phi);
    } else {
      const double cn = c * c1 - s * s1;
      s = s * c1 + c * s1;
      c = cn;
    }
    v += (a[k] * s + b[k] * (1.0 - c)) / static_cast<double>(k);
  }
  return 0.5 * v;
}

Point2 SmoothBody::boundary_point(double theta) const {
  const auto j = jet(theta);
  return j.h * unit(theta) + j.dh * unit_perp(theta);
}

Point2 SmoothBody::grid_point(std::size_t k) const {
  return Point2{h_[k] * cos_[k] - dh_[k] * sin_[k], h_[k] * sin_[k] + dh_[k] * cos_[k]};
}

// ---- smooth-body arc helpers ---------------------------------------------

namespace {

// Area between the arc of normals [pa, pb] and its chord, by fanning from the
// chord midpoint: 1/2 int rho (h - <c, u>) dphi.
// (1/2) integral_pa^pb rho (h - <c, u>). The rho h part is the swept
// sector; rho u integrates to the rotated chord X(pb) - X(pa).
double arc_cap(const SmoothBody& k, double pa, double pb, Point2 c) {
  const Point2 d = k.boundary_point(pb) - k.boundary_point(pa);
  return k.sector(pb) - k.sector(pa) - 0.5 * dot(c, Point2{d.y, -d.x});
}

// Normals phi1 in (theta - pi, theta) and phi2 in (theta, theta + pi) of the
// boundary points on the line <u(theta), x> = a.
// D(phi) = h(theta) - <u(theta), X(phi)> has a double zero at theta and
// slope -rho(phi) sin(theta - phi); Newton runs on sqrt(D), which is close
// to linear in phi on either side.
std::pair<double, double> chord_normals(const SmoothBody& k, double theta, double a, double g1 = NAN,
                                        double g2 = NAN) {
  const Point2 u = unit(theta);
  const auto jt = k.jet(theta);
  const double target = std::sqrt(std::max(jt.h - a, 0.0));
  auto q = [&](double phi) {
    const auto j = k.jet(phi);
    const Point2 e = unit(phi);
    const Point2 x = j.h * e + j.dh * Point2{-e.y, e.x};
    const double d = jt.h - dot(u, x);
    if (!(d > 0.0)) return std::pair{-target, 0.0};
    const double r = std::sqrt(d);
    return std::pair{r - target, -j.rho() * std::sin(theta - phi) / (2.0 * r)};
  };
  // without guesses start from the parabolic estimate of the half-chord
  if (std::isnan(g1) || std::isnan(g2)) {
    const double w = std::sqrt(2.0 * std::max(jt.h - a, 0.0) / std::max(jt.rho(), 1e-300));
    g1 = theta - w;
    g2 = theta + w;
  }
  // D is a difference of O(|X|) terms, so sqrt(D) carries ~eps |X| / sqrt(D)
  const double noise = 8.0 * std::numeric_limits<double>::epsilon() * (std::abs(jt.h) + std::abs(jt.dh) + std::abs(a)) /
                       std::max(target, 1e-300);
  const double p1 = roots::newton_bracketed(q, theta, theta - kPi, g1, 1e-15, noise);
  const double p2 = roots::newton_bracketed(q, theta, theta + kPi, g2, 1e-15, noise);
  return {p1, p2};
}

// Appends the boundary points X(phi_i) for an arc split into `segments`
// pieces, each followed by an area-matching apex. The final endpoint is
// appended only when include_end is set.
void append_arc(const SmoothBody& k, double pa, double pb, std::size_t segments, bool include_end,
                std::vector<Point2>& out) {
  const double step = (pb - pa) / static_cast<double>(segments);
  Point2 prev = k.boundary_point(pa);
  for (std::size_t i = 0; i < segments; ++i) {
    const double a = pa + step * static_cast<double>(i);
    const double b = (i + 1 == segments) ? pb : a + step;
    const Point2 next = k.boundary_point(b);
    out.push_back(prev);
    const Point2 d = next - prev;
    const double len = norm(d);
    if (len > 1e-13) {
      const Point2 mid = 0.5 * (prev + next);
      const double cap = k.sector(b) - k.sector(a) - 0.5 * dot(mid, Point2{d.y, -d.x});
      if (cap > 0.0) out.push_back(mid + (2.0 * cap / len) * Point2{d.y / len, -d.x / len});
    }
    prev = next;
  }
  if (include_end) out.push_back(prev);
}

double smooth_area(const SmoothBody& k) {
  double s = 0.0;
  const auto h = k.h();
  const auto dh = k.dh();
  for (std::size_t i = 0; i < h.size(); ++i) s += h[i] * h[i] - dh[i] * dh[i];
  return 0.5 * s * k.step();
}

std::vector<double> grid_cos(std::size_t m) {
  std::vector<double> c(m);
  for (std::size_t j = 0; j < m; ++j) c[j] = std::cos(kTwoPi * static_cast<double>(j) / static_cast<double>(m));
  return c;
}

std::vector<double> grid_sin(std::size_t m) {
  std::vector<double> s(m);
  for (std::size_t j = 0; j < m; ++j) s[j] = std::sin(kTwoPi * static_cast<double>(j) / static_cast<double>(m));
  return s;
}

void require_interior(const SmoothBody& k, Point2 x) {
  const auto h = k.h();
  const auto c = k.grid_cos();
  const auto s = k.grid_sin();
  for (std::size_t i = 0; i < h.size(); ++i) {
    if (h[i] - c[i] * x.x - s[i] * x.y <= 0.0) throw Error(ErrorCode::OutsideBody, "point not interior to body");
  }
}

}  // namespace

// ---- primitives ----------------------------------------------------------

double area(const ConvexBody& k) {
  return k.is_polygon() ? k.polygon().area() : smooth_area(k.smooth());
}

double perimeter(const ConvexBody& k) {
  if (k.is_polygon()) return k.polygon().perimeter();
  const auto& s = k.smooth();
  double p = 0.0;
  for (double r : s.rho()) p += r;
  return p * s.step();
}

Point2 centroid(const ConvexBody& k) {
  if (k.is_polygon()) return k.polygon().centroid();
  return discretize(k).centroid();
}

double support(const ConvexBody& k, double theta) {
  return k.is_polygon() ? k.polygon().support(theta) : k.smooth().support(theta);
}

std::vector<double> support_grid(const ConvexBody& k, std::size_t m) {
  if (k.is_smooth()) {
    const auto& s = k.smooth();
    if (m == s.grid_size()) return {s.h().begin(), s.h().end()};
    return spectral::synthesize(s.series(), m, 0);
  }
  const auto& p = k.polygon();
  const auto c = grid_cos(m);
  const auto s = grid_sin(m);
  std::vector<double> out(m);
  kernels::active().support_grid(p.xs().data(), p.ys().data(), p.size(), c.data(), s.data(), m, out.data());
  return out;
}

Polygon discretize(const ConvexBody& k, std::size_t samples) {
  if (k.is_polygon()) return k.polygon();
  std::vector<Point2> pts;
  pts.reserve(2 * samples);
  append_arc(k.smooth(), 0.0, kTwoPi, samples, false, pts);
  return Polygon(std::move(pts));
}

Polygon clip(const ConvexBody& k, const Halfplane& h) {
  const double full = area(k);
  if (k.is_polygon()) {
    auto pts = hp::clip_convex(k.polygon().vertices(), h.normal(), h.offset);
    if (pts.size() < 3 || hp::shoelace(pts) <= 1e-15 * full) throw Error(ErrorCode::EmptyIntersection, "K cap H has zero area");
    return Polygon(std::move(pts));
  }
  const auto& s = k.smooth();
  const double th = h.normal_angle;
  if (h.offset >= s.support(th)) return discretize(k);
  if (h.offset <= -s.support(th + kPi)) throw Error(ErrorCode::EmptyIntersection, "K cap H has zero area");
  // kept arc runs from phi2 to phi1 + 2pi, chord closes it
  const auto [p1, p2] = chord_normals(s, th, h.offset);
  const double span = p1 + kTwoPi - p2;
  const auto segments = std::max<std::size_t>(4, static_cast<std::size_t>(span / s.step()) + 1);
  std::vector<Point2> pts;
  pts.reserve(2 * segments + 2);
  append_arc(s, p2, p1 + kTwoPi, segments, true, pts);
  if (hp::shoelace(pts) <= 1e-15 * full) throw Error(ErrorCode::EmptyIntersection, "K cap H has zero area");
  return Polygon(std::move(pts));
}

double cut_area(const ConvexBody& k, double theta, double a) {
  if (k.is_polygon()) {
    const Point2 u = unit(theta);
    const auto pts = hp::clip_convex(k.polygon().vertices(), -u, -a, 0.0);
    return std::max(0.0, hp::shoelace(pts));
  }
  const auto& s = k.smooth();
  if (a >= s.support(theta)) return 0.0;
  if (a <= -s.support(theta + kPi)) return smooth_area(s);
  const auto [p1, p2] = chord_normals(s, theta, a);
  const Point2 c = 0.5 * (s.boundary_point(p1) + s.boundary_point(p2));
  return arc_cap(s, p1, p2, c);
}

double cut_offset_for_area(const ConvexBody& k, double theta, double t) {
  const double full = area(k);
  if (!(t > 0.0 && t < full)) throw Error(ErrorCode::DomainError, "cut area t must lie in (0, |K|)");
  double hi = support(k, theta);
  double lo = -support(k, theta + kPi);
  if (k.is_polygon()) return roots::illinois([&](double off) { return cut_area(k, theta, off) - t; }, lo, hi, 1e-16);
  // Safeguarded Newton: the cap area has derivative -|chord| in the offset.
  // The start is the parabolic cap estimate (4/3) sqrt(2 rho) d^{3/2} = t.
  const auto& s = k.smooth();
  const auto j = s.jet(theta);
  double a = j.h - std::pow(0.75 * t / std::sqrt(2.0 * std::max(j.rho(), 1e-300)), 2.0 / 3.0);
  if (!(a > lo && a < hi)) a = 0.5 * (lo + hi);
  double g1 = NAN, g2 = NAN;
  for (int it = 0; it < 100; ++it) {
    const auto [p1, p2] = chord_normals(s, theta, a, g1, g2);
    g1 = p1;
    g2 = p2;
    const Point2 x1 = s.boundary_point(p1), x2 = s.boundary_point(p2);
    const double f = arc_cap(s, p1, p2, 0.5 * (x1 + x2)) - t;
    if (f == 0.0) return a;
    if (f > 0.0) lo = a; else hi = a;
    const double len = norm(x2 - x1);
    double next = len > 0.0 ? a + f / len : 0.5 * (lo + hi);
    if (!(next > lo && next < hi)) next = 0.5 * (lo + hi);
    if (std::abs(next - a) <= 1e-15 * (1.0 + std::abs(a)) || hi - lo <= 1e-15 * (1.0 + std::abs(a))) return next;
    a = next;
  }
  return a;
}

PolarValue polar_value(const ConvexBody& k, Point2 x) {
  PolarValue r;
  if (k.is_polygon()) {
    const auto& p = k.polygon();
    const std::size_t n = p.size();
    std::vector<Point2> nrm(n);
    std::vector<double> dist(n);
    for (std::size_t i = 0; i < n; ++i) {
      const auto h = p.edge_halfplane(i);
      nrm[i] = h.normal();
      dist[i] = h.offset - dot(nrm[i], x);
      if (!(dist[i] > 0.0)) throw Error(ErrorCode::OutsideBody, "point not interior to polygon");
    }
    for (std::size_t i = 0; i < n; ++i) {
      const std::size_t j = (i + 1) % n;
      const double s = cross(nrm[i], nrm[j]);
      const double t = 1.0 / (dist[i] * dist[j]);
      const Point2 g = nrm[i] * (1.0 / dist[i]) + nrm[j] * (1.0 / dist[j]);
      r.value += 0.5 * s * t;
      r.gradient = r.gradient + (0.5 * s * t) * g;
      const double ii = 1.0 / (dist[i] * dist[i]), jj = 1.0 / (dist[j] * dist[j]);
      const double w = 0.5 * s * t;
      r.hessian[0] += w * (g.x * g.x + nrm[i].x * nrm[i].x * ii + nrm[j].x * nrm[j].x * jj);
      r.hessian[1] += w * (g.x * g.y + nrm[i].x * nrm[i].y * ii + nrm[j].x * nrm[j].y * jj);
      r.hessian[2] += w * (g.y * g.y + nrm[i].y * nrm[i].y * ii + nrm[j].y * nrm[j].y * jj);
    }
    return r;
  }
  const auto& s = k.smooth();
  const auto mom = kernels::polar_moments(s.h(), s.grid_cos(), s.grid_sin(), x.x, x.y);
  if (!(mom.min_d > 0.0)) throw Error(ErrorCode::OutsideBody, "h_{K-x} <= 0 at some grid angle");
  const double dt = s.step();
  r.value = 0.5 * dt * mom.inv2;
  r.gradient = {dt * mom.gx, dt * mom.gy};
  r.hessian = {3.0 * dt * mom.hxx, 3.0 * dt * mom.hxy, 3.0 * dt * mom.hyy};
  return r;
}

double polar_area_about(const ConvexBody& k, Point2 x) { return polar_value(k, x).value; }

double illuminated_area(const ConvexBody& k, Point2 x) {
  if (k.is_polygon()) {
    const auto& p = k.polygon();
    double total = 0.0;
    for (std::size_t i = 0; i < p.size(); ++i) {
      const auto h = p.edge_halfplane(i);
      const double over = dot(h.normal(), x) - h.offset;
      if (over > 0.0) total += 0.5 * over * norm(p.vertices()[(i + 1) % p.size()] - p.vertices()[i]);
    }
    return total;
  }
  const auto& s = k.smooth();
  const auto h = s.h();
  const auto c = s.grid_cos();
  const auto sn = s.grid_sin();
  std::size_t best = 0;
  double gbest = -std::numeric_limits<double>::infinity();
  for (std::size_t i = 0; i < h.size(); ++i) {
    const double g = c[i] * x.x + sn[i] * x.y - h[i];
    if (g > gbest) {
      gbest = g;
      best = i;
    }
  }
  auto g = [&](double phi) { return dot(unit(phi), x) - s.support(phi); };
  const double th0 = s.step() * static_cast<double>(best);
  const double peak = roots::golden_min([&](double phi) { return -g(phi); }, th0 - s.step(), th0 + s.step(), 1e-13);
  if (g(peak) <= 0.0) return 0.0;
  const double pa = roots::illinois(g, peak - kPi, peak);
  const double pb = roots::illinois(g, peak, peak + kPi);
  return -arc_cap(s, pa, pb, x);
}

namespace {

double polygon_overlap(const Polygon& a, const Polygon& b, Point2 shift) {
  auto lines = hp::edges(a);
  for (auto l : hp::edges(b)) {
    l.b += dot(l.n, shift);
    lines.push_back(l);
  }
  const auto pts = hp::intersect(std::move(lines));
  return pts ? hp::shoelace(*pts) : 0.0;
}

// Distance from interior point o to the boundary of a smooth body along v.
double smooth_radial(const SmoothBody& s, Point2 o, Point2 v) {
  const double psi = std::atan2(v.y, v.x);
  auto f = [&](double phi) { return cross(v, s.boundary_point(phi) - o); };
  const double phi = roots::illinois(f, psi - 0.5 * kPi, psi + 0.5 * kPi, 1e-16);
  return dot(s.boundary_point(phi) - o, v);
}

// K symmetric about c: K cap (K + x) is symmetric about m = c + x/2 and is
// twice the cap of K cut by the unique chord through m that m bisects. The
// chord ends are where the two boundaries cross, so moving x by dx sweeps
// length * <nu, dx> out of the overlap (nu the chord normal facing x).
OverlapSlope symmetric_overlap(const SmoothBody& s, Point2 c, Point2 x) {
  const double len = norm(x);
  if (len == 0.0) return {smooth_area(s), {}};
  const Point2 v = (1.0 / len) * x;
  // within round-off of the boundary the chord through m degenerates
  if (len >= 2.0 * smooth_radial(s, c, v) * (1.0 - 1e-12)) return {0.0, {}};
  const Point2 m = c + 0.5 * x;
  struct Chord {
    double p1, p2, g;
  };
  double g1 = NAN, g2 = NAN;  // previous chord, a good start for the next
  auto chord = [&](double theta) {
    const auto [p1, p2] = chord_normals(s, theta, dot(unit(theta), m), g1, g2);
    g1 = p1;
    g2 = p2;
    const Point2 e = s.boundary_point(p1) + s.boundary_point(p2) - 2.0 * m;
    return Chord{p1, p2, dot(unit_perp(theta), e)};
  };
  const double alpha = std::atan2(x.y, x.x);
  // The cap through m is smallest at the bisected chord, so an angle error
  // enters the area only quadratically.
  const double theta =
      roots::illinois([&](double th) { return chord(th).g; }, alpha - 0.5 * kPi, alpha + 0.5 * kPi, 1e-10);
  const auto ch = chord(theta);
  const Point2 x1 = s.boundary_point(ch.p1), x2 = s.boundary_point(ch.p2);
  const Point2 nu = unit(theta);
  return {2.0 * arc_cap(s, ch.p1, ch.p2, 0.5 * (x1 + x2)), -norm(x2 - x1) * nu};
}

}  // namespace

double overlap_area(const ConvexBody& k, Point2 x) {
  if (k.is_polygon()) return polygon_overlap(k.polygon(), k.polygon(), x);
  Point2 c;
  if (is_symmetric(k, &c)) return symmetric_overlap(k.smooth(), c, x).area;
  const auto p = discretize(k);
  return polygon_overlap(p, p, x);
}

double overlap_area(const ConvexBody& k, Point2 x, Point2 center) {
  if (k.is_polygon()) return polygon_overlap(k.polygon(), k.polygon(), x);
  return symmetric_overlap(k.smooth(), center, x).area;
}

OverlapSlope symmetric_overlap_slope(const SmoothBody& k, Point2 x, Point2 center) {
  return symmetric_overlap(k, center, x);
}

ConvexBody transform(const ConvexBody& k, const AffineMap2& a) {
  if (k.is_polygon()) {
    std::vector<Point2> v;
    v.reserve(k.polygon().size());
    for (const auto& p : k.polygon().vertices()) v.push_back(a.apply(p));
    if (a.det() < 0.0) std::reverse(v.begin(), v.end());
    return Polygon(std::move(v));
  }
  const auto& s = k.smooth();
  const std::size_t m = s.grid_size();
  const Point2 sh = a.shift();
  return SmoothBody::from_function(
      [&](double th) {
        const Point2 u = unit(th);
        const Point2 w = a.apply_transpose(u);
        return norm(w) * s.support(std::atan2(w.y, w.x)) + dot(u, sh);
      },
      m);
}

double radius_of_curvature(const SmoothBody& k, double theta) { return k.jet(theta).rho(); }

std::vector<BoundarySample> boundary_samples(const ConvexBody& k, std::size_t count) {
  if (count < 16) throw Error(ErrorCode::DomainError, "boundary_samples needs count >= 16");
  std::vector<BoundarySample> out;
  out.reserve(count + 8);
  if (k.is_polygon()) {
    const auto& p = k.polygon();
    const double per = p.perimeter();
    for (std::size_t i = 0; i < p.size(); ++i) {
      const Point2 a = p.vertices()[i], b = p.vertices()[(i + 1) % p.size()];
      const double len = norm(b - a);
      const auto n = std::max<std::size_t>(1, static_cast<std::size_t>(std::llround(static_cast<double>(count) * len / per)));
      const Point2 nrm = p.edge_halfplane(i).normal();
      for (std::size_t j = 0; j < n; ++j) {
        const double f = (static_cast<double>(j) + 0.5) / static_cast<double>(n);
        out.push_back({a + f * (b - a), nrm, len / static_cast<double>(n)});
      }
    }
    return out;
  }
  const auto& s = k.smooth();
  if (count == s.grid_size()) {
    for (std::size_t i = 0; i < count; ++i) {
      out.push_back({s.grid_point(i), {s.grid_cos()[i], s.grid_sin()[i]}, s.rho()[i] * s.step()});
    }
    return out;
  }
  const double dt = kTwoPi / static_cast<double>(count);
  for (std::size_t i = 0; i < count; ++i) {
    const double th = dt * static_cast<double>(i);
    const auto j = s.jet(th);
    out.push_back({j.h * unit(th) + j.dh * unit_perp(th), unit(th), j.rho() * dt});
  }
  return out;
}

double rolling_radius(const ConvexBody& k, const BoundarySample& smp) {
  const Point2 x = smp.point, nn = smp.normal;
  if (k.is_polygon()) {
    const auto& p = k.polygon();
    double r = std::numeric_limits<double>::infinity();
    for (std::size_t i = 0; i < p.size(); ++i) {
      const auto h = p.edge_halfplane(i);
      const double denom = 1.0 - dot(h.normal(), nn);
      if (denom <= 1e-14) continue;
      r = std::min(r, std::max(0.0, h.offset - dot(h.normal(), x)) / denom);
    }
    return r;
  }
  const auto& s = k.smooth();
  const auto h = s.h();
  const auto c = s.grid_cos();
  const auto sn = s.grid_sin();
  double scale = 0.0;
  for (double v : h) scale = std::max(scale, v);
  auto contained = [&](double r) {
    const Point2 ctr = x - r * nn;
    for (std::size_t i = 0; i < h.size(); ++i) {
      if (h[i] - c[i] * ctr.x - sn[i] * ctr.y - r < -1e-14 * scale) return false;
    }
    return true;
  };
  const double hi = half_min_width(k) * (1.0 + 1e-12);
  if (contained(hi)) return hi;
  auto [lo, up] = roots::bisect_predicate(contained, 0.0, hi, 1e-11);
  return 0.5 * (lo + up);
}

double hausdorff_distance(const ConvexBody& k, const ConvexBody& l, std::size_t m) {
  const auto a = support_grid(k, m);
  const auto b = support_grid(l, m);
  return kernels::max_abs_diff(a, b);
}

double radial_distance(const ConvexBody& k, Point2 o, Point2 v) {
  if (k.is_polygon()) {
    const auto& p = k.polygon();
    double best = std::numeric_limits<double>::infinity();
    for (std::size_t i = 0; i < p.size(); ++i) {
      const auto h = p.edge_halfplane(i);
      const Point2 n = h.normal();
      const double gap = h.offset - dot(n, o);
      if (gap < 0.0) throw Error(ErrorCode::OutsideBody, "ray origin outside polygon");
      const double dv = dot(n, v);
      if (dv > 1e-15) best = std::min(best, gap / dv);
    }
    return best;
  }
  const auto& s = k.smooth();
  require_interior(s, o);
  return smooth_radial(s, o, v);
}

double half_min_width(const ConvexBody& k) {
  const auto g = support_grid(k, kDefaultGrid);
  const std::size_t half = g.size() / 2;
  double w = std::numeric_limits<double>::infinity();
  for (std::size_t j = 0; j < half; ++j) w = std::min(w, g[j] + g[j + half]);
  return 0.5 * w;
}

bool is_symmetric(const ConvexBody& k, Point2* center, double tol) {
  Point2 c;
  if (k.is_polygon()) {
    c = k.polygon().centroid();
  } else {
    const auto& sr = k.smooth().series();
    if (sr.a.size() > 1) c = {sr.a[1], sr.b[1]};
  }
  const auto g = support_grid(k, kDefaultGrid);
  const auto cs = grid_cos(g.size());
  const auto sn = grid_sin(g.size());
  const std::size_t half = g.size() / 2;
  double scale = 1.0, dev = 0.0;
  for (std::size_t j = 0; j < g.size(); ++j) scale = std::max(scale, std::abs(g[j]));
  for (std::size_t j = 0; j < half; ++j) {
    const double shift = cs[j] * c.x + sn[j] * c.y;
    dev = std::max(dev, std::abs((g[j] - shift) - (g[j + half] + shift)));
  }
  if (center) *center = c;
  return dev <= tol * scale;
}

double support_excess(const ConvexBody& inner, const ConvexBody& outer, std::size_t m) {
  const auto a = support_grid(inner, m);
  const auto b = support_grid(outer, m);
  double e = -std::numeric_limits<double>::infinity();
  for (std::size_t j = 0; j < m; ++j) e = std::max(e, a[j] - b[j]);
  return e;
}

}  // namespace asa
