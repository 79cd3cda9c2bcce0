#pragma once

// The four parameterized families K -> K_t as polygons at a controlled
// direction count N, and the volume gap |K| - |K_t| (|K_t| - |K| for the
// outer family).

#include <array>
#include <cstddef>
#include <optional>
#include <string_view>

#include "asa/geometry.hpp"

namespace asa {

enum class ConstructionKind { Floating, Convolution, Santalo, Illumination };
enum class Orientation { Inner, Outer };

inline constexpr std::array<ConstructionKind, 4> kAllKinds = {
    ConstructionKind::Floating, ConstructionKind::Convolution, ConstructionKind::Santalo,
    ConstructionKind::Illumination};

inline constexpr std::size_t kDefaultDirections = 720;

constexpr Orientation orientation(ConstructionKind k) {
  return k == ConstructionKind::Illumination ? Orientation::Outer : Orientation::Inner;
}
std::string_view to_string(ConstructionKind k);
/// Accepts floating | convolution | santalo | illumination; throws ParseError.
ConstructionKind parse_kind(std::string_view name);

struct FamilyResult {
  std::optional<Polygon> body;  // empty only when `degenerate`
  double t = 0.0;
  ConstructionKind kind = ConstructionKind::Floating;
  std::size_t resolution = 0;
  /// max over directions of |F(solution) - target| for the solved functional
  double residual = 0.0;
  /// tolerance the residual is held to
  double tolerance = 0.0;
  /// Santalo region collapsed to (nearly) a point: every radius below 1e-6
  bool degenerate = false;
  /// center of the rays (symmetry center, Santalo point or centroid)
  Point2 origin;
  /// max over the grid of h_{K_t} - h_K (inner) or h_K - h_{K_t} (outer);
  /// containment holds when this is <= 1e-6
  double containment_excess = 0.0;

  const Polygon& polygon() const;  // throws EmptyBody when degenerate
};

FamilyResult floating_body(const ConvexBody& k, double t, std::size_t n = kDefaultDirections);
/// K must be centrally symmetric; the result is centered at its center.
FamilyResult convolution_body(const ConvexBody& k, double t, std::size_t n = kDefaultDirections);
FamilyResult santalo_region(const ConvexBody& k, double t, std::size_t n = kDefaultDirections);
FamilyResult illumination_body(const ConvexBody& k, double t, std::size_t n = kDefaultDirections);
FamilyResult construct(const ConvexBody& k, ConstructionKind kind, double t, std::size_t n = kDefaultDirections);

/// Minimizer of x -> |(K - x)^o| (damped Newton on the strictly convex polar area).
Point2 santalo_point(const ConvexBody& k);

/// Point the radial constructions shoot rays from.
Point2 construction_origin(const ConvexBody& k, ConstructionKind kind);

/// Polygon that a smooth K itself becomes under the uniform N-direction
/// sampling used by `construct` (circumscribed for Floating, ray-exit from the
/// construction origin otherwise). Differences against it cancel the sampling
/// bias. Polygon inputs are sampled adaptively and are their own reference.
Polygon reference_polygon(const ConvexBody& k, ConstructionKind kind, std::size_t n = kDefaultDirections);

/// |K| - |K_t| for inner kinds, |K_t| - |K| for Illumination. For smooth K
/// the polygon difference is rescaled by |K| / |reference polygon|.
double volume_gap(const ConvexBody& k, ConstructionKind kind, double t, std::size_t n = kDefaultDirections);

/// Membership x in K_t evaluated pointwise (no polygon is built).
class FamilyMembership {
 public:
  FamilyMembership(const ConvexBody& k, ConstructionKind kind, double t);
  bool contains(Point2 x) const;
  /// Distance from `from` along unit `dir` to the boundary of K_t, by
  /// bisection on membership. `from` must lie in K_t.
  double exit_distance(Point2 from, Point2 dir) const;

 private:
  const ConvexBody& k_;
  ConstructionKind kind_;
  double t_;
  Point2 center_;
};

}  // namespace asa
