#include "asa/halfplane.hpp"

#include <algorithm>
#include <cmath>
#include <deque>

namespace asa::hp {
namespace {

Point2 meet(const Line& a, const Line& b) {
  const double det = a.n.x * b.n.y - a.n.y * b.n.x;
  return {(a.b * b.n.y - a.n.y * b.b) / det, (a.n.x * b.b - a.b * b.n.x) / det};
}

}  // namespace

std::optional<std::vector<Point2>> intersect(std::vector<Line> lines, double tol) {
  if (lines.size() < 3) return std::nullopt;
  std::sort(lines.begin(), lines.end(), [](const Line& a, const Line& b) { return a.angle < b.angle; });

  // same direction: keep the tighter one
  std::vector<Line> uniq;
  uniq.reserve(lines.size());
  for (const auto& l : lines) {
    if (!uniq.empty() && std::abs(cross(uniq.back().n, l.n)) < 1e-14 && dot(uniq.back().n, l.n) > 0.0) {
      if (l.b < uniq.back().b) uniq.back() = l;
      continue;
    }
    uniq.push_back(l);
  }
  if (uniq.size() > 1 && std::abs(cross(uniq.back().n, uniq.front().n)) < 1e-14 &&
      dot(uniq.back().n, uniq.front().n) > 0.0) {
    if (uniq.back().b < uniq.front().b) uniq.front() = uniq.back();
    uniq.pop_back();
  }
  if (uniq.size() < 3) return std::nullopt;

  // A corner within tol of the new line is popped too, so lines that only
  // touch the region at a vertex never produce clusters of near-duplicate
  // vertices.
  std::deque<Line> dq;
  for (const auto& l : uniq) {
    while (dq.size() > 1 && l.outside(meet(dq[dq.size() - 1], dq[dq.size() - 2]), -tol)) dq.pop_back();
    while (dq.size() > 1 && l.outside(meet(dq[0], dq[1]), -tol)) dq.pop_front();
    if (!dq.empty() && cross(dq.back().n, l.n) <= 0.0) {
      // l turns clockwise relative to the back (or is antiparallel): the
      // region is empty or degenerate
      if (cross(dq.back().n, l.n) < -1e-14 || dot(dq.back().n, l.n) < 0.0) return std::nullopt;
    }
    dq.push_back(l);
  }
  while (dq.size() > 2 && dq[0].outside(meet(dq[dq.size() - 1], dq[dq.size() - 2]), -tol)) dq.pop_back();
  while (dq.size() > 2 && dq[dq.size() - 1].outside(meet(dq[0], dq[1]), -tol)) dq.pop_front();
  if (dq.size() < 3) return std::nullopt;

  std::vector<Point2> out;
  out.reserve(dq.size());
  for (std::size_t i = 0; i < dq.size(); ++i) {
    const auto& a = dq[i];
    const auto& b = dq[(i + 1) % dq.size()];
    if (cross(a.n, b.n) <= 0.0) return std::nullopt;
    out.push_back(meet(a, b));
  }
  if (shoelace(out) <= 0.0) return std::nullopt;
  return out;
}

std::vector<Line> edges(const Polygon& p) {
  std::vector<Line> out;
  out.reserve(p.size());
  for (std::size_t i = 0; i < p.size(); ++i) {
    const auto h = p.edge_halfplane(i);
    out.push_back({h.normal(), h.offset, h.normal_angle});
  }
  return out;
}

std::vector<Point2> clip_convex(std::span<const Point2> poly, Point2 n, double b, double tol) {
  std::vector<Point2> out;
  const std::size_t m = poly.size();
  out.reserve(m + 2);
  for (std::size_t i = 0; i < m; ++i) {
    const Point2 p = poly[i];
    const Point2 q = poly[(i + 1) % m];
    const double dp = dot(n, p) - b;
    const double dq = dot(n, q) - b;
    const bool pin = dp <= tol;
    if (pin) out.push_back(p);
    if ((dp < -tol && dq > tol) || (dp > tol && dq < -tol)) {
      const double s = dp / (dp - dq);
      out.push_back(p + s * (q - p));
    }
  }
  return out;
}

double shoelace(std::span<const Point2> pts) {
  if (pts.size() < 3) return 0.0;
  const Point2 o = pts[0];
  double s = 0.0;
  for (std::size_t i = 1; i + 1 < pts.size(); ++i) s += cross(pts[i] - o, pts[i + 1] - o);
  return 0.5 * s;
}

}  // namespace asa::hp
