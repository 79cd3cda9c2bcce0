#pragma once

// Intersection of half-planes {p : <n, p> <= b} in O(n log n) (O(n) when the
// input is already sorted by normal angle). The input must describe a
// bounded region.

#include <optional>
#include <span>
#include <vector>

#include "asa/geometry.hpp"

namespace asa::hp {

struct Line {
  Point2 n;  // unit outward normal
  double b;  // offset
  double angle;

  static Line from(double theta, double offset) { return {unit(theta), offset, wrap_angle(theta)}; }
  bool outside(Point2 p, double tol) const { return dot(n, p) > b + tol; }
};

/// Vertex list of the intersection (counterclockwise) or nullopt when empty
/// or degenerate. `tol` is the on-line tolerance.
std::optional<std::vector<Point2>> intersect(std::vector<Line> lines, double tol = 1e-12);

/// Edges of a counterclockwise polygon as lines.
std::vector<Line> edges(const Polygon& p);

/// Sutherland-Hodgman pass keeping {<n,p> <= b}.
std::vector<Point2> clip_convex(std::span<const Point2> poly, Point2 n, double b, double tol = 1e-12);

double shoelace(std::span<const Point2> pts);

}  // namespace asa::hp
