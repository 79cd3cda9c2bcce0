#pragma once

// Planar convex bodies: exact polygons and smooth bodies given by periodic
// support-function samples, plus the primitives the constructions are built
// from (areas, supports, cuts, polars, overlaps, curvature, rolling radius).

#include <array>
#include <cmath>
#include <cstddef>
#include <numbers>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "asa/spectral.hpp"

namespace asa {

inline constexpr double kPi = std::numbers::pi;
inline constexpr double kTwoPi = 2.0 * std::numbers::pi;
inline constexpr std::size_t kDefaultGrid = 2048;

enum class ErrorCode {
  InvalidBody,
  EmptyIntersection,
  DomainError,
  OutsideBody,
  SingularMap,
  NotSymmetric,
  EmptyBody,
  EmptyRegion,
  BracketError,
  OriginOutside,
  NotNested,
  NotContainingUnitBall,
  ParseError,
};

std::string_view to_string(ErrorCode code);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}
  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

struct Point2 {
  double x = 0.0;
  double y = 0.0;

  friend Point2 operator+(Point2 a, Point2 b) { return {a.x + b.x, a.y + b.y}; }
  friend Point2 operator-(Point2 a, Point2 b) { return {a.x - b.x, a.y - b.y}; }
  friend Point2 operator-(Point2 a) { return {-a.x, -a.y}; }
  friend Point2 operator*(double s, Point2 a) { return {s * a.x, s * a.y}; }
  friend Point2 operator*(Point2 a, double s) { return {s * a.x, s * a.y}; }
  friend bool operator==(Point2, Point2) = default;
};

inline double dot(Point2 a, Point2 b) { return a.x * b.x + a.y * b.y; }
inline double cross(Point2 a, Point2 b) { return a.x * b.y - a.y * b.x; }
inline double norm(Point2 a) { return std::hypot(a.x, a.y); }
/// u(theta) = (cos theta, sin theta)
inline Point2 unit(double theta) { return {std::cos(theta), std::sin(theta)}; }
/// u'(theta), the unit vector rotated a quarter turn counterclockwise
inline Point2 unit_perp(double theta) { return {-std::sin(theta), std::cos(theta)}; }
double wrap_angle(double theta);  // to [0, 2pi)

class AffineMap2 {
 public:
  /// p -> linear * p + shift; throws SingularMap when |det| < 1e-12.
  AffineMap2(double a11, double a12, double a21, double a22, Point2 shift = {});
  static AffineMap2 identity() { return {1, 0, 0, 1}; }
  static AffineMap2 rotation(double angle);
  static AffineMap2 scaling(double sx, double sy) { return {sx, 0, 0, sy}; }

  Point2 apply(Point2 p) const { return {m_[0] * p.x + m_[1] * p.y + shift_.x, m_[2] * p.x + m_[3] * p.y + shift_.y}; }
  Point2 apply_linear(Point2 p) const { return {m_[0] * p.x + m_[1] * p.y, m_[2] * p.x + m_[3] * p.y}; }
  Point2 apply_transpose(Point2 p) const { return {m_[0] * p.x + m_[2] * p.y, m_[1] * p.x + m_[3] * p.y}; }
  AffineMap2 compose(const AffineMap2& inner) const;  // this o inner
  AffineMap2 inverse() const;

  double det() const { return det_; }
  Point2 shift() const { return shift_; }
  const std::array<double, 4>& linear() const { return m_; }

 private:
  std::array<double, 4> m_;
  Point2 shift_;
  double det_;
};

/// {p : <u(normal_angle), p> <= offset}
struct Halfplane {
  double normal_angle = 0.0;
  double offset = 0.0;

  Halfplane() = default;
  Halfplane(double angle, double off) : normal_angle(wrap_angle(angle)), offset(off) {}
  Point2 normal() const { return unit(normal_angle); }
  bool contains(Point2 p, double tol = 0.0) const { return dot(normal(), p) <= offset + tol; }
};

/// Convex polygon, counterclockwise, strictly convex at every vertex.
/// Collinear and duplicate vertices are removed on construction.
class Polygon {
 public:
  explicit Polygon(std::vector<Point2> vertices);
  /// Convex hull of an arbitrary point set (Andrew's monotone chain).
  static Polygon hull(std::vector<Point2> points);
  static Polygon regular(std::size_t n, double radius, Point2 center = {}, double phase = 0.0);
  static Polygon box(double x0, double y0, double x1, double y1);

  const std::vector<Point2>& vertices() const { return v_; }
  std::size_t size() const { return v_.size(); }
  std::span<const double> xs() const { return xs_; }
  std::span<const double> ys() const { return ys_; }

  double area() const;
  double perimeter() const;
  Point2 centroid() const;
  double support(double theta) const;
  /// Outward unit normal and offset of edge i (from vertex i to i+1).
  Halfplane edge_halfplane(std::size_t i) const;

 private:
  std::vector<Point2> v_;
  std::vector<double> xs_, ys_;
};

/// Value and first two derivatives of the support function at an angle.
struct SupportJet {
  double h = 0.0;
  double dh = 0.0;
  double d2h = 0.0;
  double rho() const { return h + d2h; }
};

/// Smooth strictly convex body given by M equispaced support samples
/// h(2 pi k / M). Derivatives are spectral; off-grid values use the
/// trigonometric interpolant. The origin must be interior (h > 0).
class SmoothBody {
 public:
  static SmoothBody from_samples(std::vector<double> h);
  static SmoothBody from_fourier(double constant, std::span<const double> cos_coeffs,
                                 std::span<const double> sin_coeffs, std::size_t grid = kDefaultGrid);
  template <class F>
  static SmoothBody from_function(F&& h, std::size_t grid = kDefaultGrid) {
    std::vector<double> s(grid);
    for (std::size_t k = 0; k < grid; ++k) s[k] = h(kTwoPi * static_cast<double>(k) / static_cast<double>(grid));
    return from_samples(std::move(s));
  }
  static SmoothBody disk(double radius, Point2 center = {}, std::size_t grid = kDefaultGrid);
  static SmoothBody ellipse(double a, double b, std::size_t grid = kDefaultGrid);

  std::size_t grid_size() const { return h_.size(); }
  double step() const { return kTwoPi / static_cast<double>(h_.size()); }
  std::span<const double> h() const { return h_; }
  std::span<const double> dh() const { return dh_; }
  std::span<const double> rho() const { return rho_; }
  std::span<const double> grid_cos() const { return cos_; }
  std::span<const double> grid_sin() const { return sin_; }
  const spectral::Series& series() const { return series_; }

  SupportJet jet(double theta) const;
  double support(double theta) const { return jet(theta).h; }
  /// Boundary point with outer normal u(theta): h u + h' u'.
  Point2 boundary_point(double theta) const;
  Point2 grid_point(std::size_t k) const;
  /// Area swept by the boundary from normal 0 to normal phi, seen from the
  /// origin: (1/2) integral_0^phi rho h.
  double sector(double phi) const;

 private:
  SmoothBody() = default;
  std::vector<double> h_, dh_, rho_, cos_, sin_;
  spectral::Series series_;
  spectral::Series sweep_;  // Fourier series of rho h
};

class ConvexBody {
 public:
  ConvexBody(Polygon p) : rep_(std::move(p)) {}     // NOLINT(implicit)
  ConvexBody(SmoothBody s) : rep_(std::move(s)) {}  // NOLINT(implicit)

  bool is_polygon() const { return std::holds_alternative<Polygon>(rep_); }
  bool is_smooth() const { return std::holds_alternative<SmoothBody>(rep_); }
  const Polygon& polygon() const { return std::get<Polygon>(rep_); }
  const SmoothBody& smooth() const { return std::get<SmoothBody>(rep_); }
  const std::variant<Polygon, SmoothBody>& rep() const { return rep_; }

 private:
  std::variant<Polygon, SmoothBody> rep_;
};

struct BoundarySample {
  Point2 point;
  Point2 normal;
  double arc_weight = 0.0;
};

// ---- primitives --------------------------------------------------------

double area(const ConvexBody& k);
double perimeter(const ConvexBody& k);
Point2 centroid(const ConvexBody& k);
double support(const ConvexBody& k, double theta);
/// Support function on the M-point grid theta_j = 2 pi j / M.
std::vector<double> support_grid(const ConvexBody& k, std::size_t m = kDefaultGrid);

/// Polygon with area equal to |K|: boundary samples at every grid normal plus
/// one apex per arc whose triangle carries the exact area between chord and
/// arc. A polygon input is returned unchanged.
Polygon discretize(const ConvexBody& k, std::size_t samples = kDefaultGrid);

/// K intersected with H, as a polygon. Throws EmptyIntersection when the
/// result has zero area.
Polygon clip(const ConvexBody& k, const Halfplane& h);
/// Area of {x in K : <u(theta), x> >= a}.
double cut_area(const ConvexBody& k, double theta, double a);
/// The offset a with cut_area(K, theta, a) = t, by a bracketed root solve.
double cut_offset_for_area(const ConvexBody& k, double theta, double t);

/// Area of the polar body (K - x)^o.
double polar_area_about(const ConvexBody& k, Point2 x);
struct PolarValue {
  double value = 0.0;
  Point2 gradient;
  std::array<double, 3> hessian{};  // xx, xy, yy
};
/// Polar area with its gradient and Hessian in x. Throws OutsideBody unless
/// x is interior.
PolarValue polar_value(const ConvexBody& k, Point2 x);

/// |co[x, K]| - |K|.
double illuminated_area(const ConvexBody& k, Point2 x);
/// |K cap (K + x)|.
double overlap_area(const ConvexBody& k, Point2 x);
/// Same for K known to be symmetric about `center` (not re-checked).
double overlap_area(const ConvexBody& k, Point2 x, Point2 center);
struct OverlapSlope {
  double area = 0.0;
  Point2 gradient;  // d area / d x
};
/// Overlap and its gradient in x for a smooth K symmetric about `center`.
OverlapSlope symmetric_overlap_slope(const SmoothBody& k, Point2 x, Point2 center);

ConvexBody transform(const ConvexBody& k, const AffineMap2& a);

double radius_of_curvature(const SmoothBody& k, double theta);
std::vector<BoundarySample> boundary_samples(const ConvexBody& k, std::size_t count);
double rolling_radius(const ConvexBody& k, const BoundarySample& s);
double hausdorff_distance(const ConvexBody& k, const ConvexBody& l, std::size_t m = kDefaultGrid);

/// Distance from an interior point along a unit direction to the boundary.
double radial_distance(const ConvexBody& k, Point2 origin, Point2 direction);
/// Half the minimal width over the support grid (upper bound for the inradius).
double half_min_width(const ConvexBody& k);
/// True when K is centrally symmetric about `center` within tol (support sup-norm).
bool is_symmetric(const ConvexBody& k, Point2* center = nullptr, double tol = 1e-9);
/// max_theta (h_inner - h_outer) over the grid; <= slack means inner is contained in outer.
double support_excess(const ConvexBody& inner, const ConvexBody& outer, std::size_t m = kDefaultGrid);

}  // namespace asa
