#include "asa/extrapolate.hpp"

#include <algorithm>
#include <array>
#include <cmath>

#include "asa/geometry.hpp"

namespace asa {
namespace {

struct Fit {
  double limit = 0.0;
  double rms = 0.0;
  bool ok = false;
};

// Householder QR of the m x 3 design [1, s, s^2] with s = t^(1/3), columns
// scaled to unit max.
Fit fit_model(std::span<const SchedulePoint> pts) {
  const std::size_t m = pts.size();
  std::vector<std::array<double, 3>> a(m);
  std::vector<double> y(m);
  double smax = 0.0;
  for (const auto& p : pts) smax = std::max(smax, std::cbrt(p.t));
  for (std::size_t i = 0; i < m; ++i) {
    const double s = std::cbrt(pts[i].t) / smax;
    a[i] = {1.0, s, s * s};
    y[i] = pts[i].value;
  }
  std::array<double, 3> diag{};
  for (std::size_t j = 0; j < 3; ++j) {
    double nrm = 0.0;
    for (std::size_t i = j; i < m; ++i) nrm += a[i][j] * a[i][j];
    nrm = std::sqrt(nrm);
    if (nrm == 0.0) return {};
    const double alpha = a[j][j] > 0.0 ? -nrm : nrm;
    std::vector<double> v(m, 0.0);
    for (std::size_t i = j; i < m; ++i) v[i] = a[i][j];
    v[j] -= alpha;
    double vv = 0.0;
    for (std::size_t i = j; i < m; ++i) vv += v[i] * v[i];
    if (vv > 0.0) {
      for (std::size_t c = j; c < 3; ++c) {
        double d = 0.0;
        for (std::size_t i = j; i < m; ++i) d += v[i] * a[i][c];
        for (std::size_t i = j; i < m; ++i) a[i][c] -= 2.0 * d / vv * v[i];
      }
      double d = 0.0;
      for (std::size_t i = j; i < m; ++i) d += v[i] * y[i];
      for (std::size_t i = j; i < m; ++i) y[i] -= 2.0 * d / vv * v[i];
    }
    diag[j] = a[j][j];
  }
  const double big = std::max({std::abs(diag[0]), std::abs(diag[1]), std::abs(diag[2])});
  const double small = std::min({std::abs(diag[0]), std::abs(diag[1]), std::abs(diag[2])});
  if (!(small > 1e-10 * big)) return {};
  std::array<double, 3> c{};
  for (int j = 2; j >= 0; --j) {
    double s = y[j];
    for (std::size_t k = j + 1; k < 3; ++k) s -= a[j][k] * c[k];
    c[j] = s / a[j][j];
  }
  double ssr = 0.0;
  for (std::size_t i = 3; i < m; ++i) ssr += y[i] * y[i];
  Fit f;
  f.limit = c[0];
  f.rms = m > 3 ? std::sqrt(ssr / static_cast<double>(m - 3)) : 0.0;
  f.ok = std::isfinite(f.limit);
  return f;
}

}  // namespace

Extrapolation extrapolate(std::span<const SchedulePoint> points) {
  if (points.size() < 4) throw Error(ErrorCode::DomainError, "extrapolate needs at least 4 points");
  for (std::size_t i = 0; i < points.size(); ++i) {
    if (!(points[i].t > 0.0) || (i > 0 && !(points[i].t < points[i - 1].t))) {
      throw Error(ErrorCode::DomainError, "schedule must be positive and strictly decreasing");
    }
  }
  const std::size_t w = std::min<std::size_t>(6, points.size());
  const auto window = points.subspan(points.size() - w);
  Extrapolation e;
  const Fit full = fit_model(window);
  const Fit reduced = fit_model(window.subspan(1));
  if (full.ok && reduced.ok) {
    e.limit = full.limit;
    e.error = 1.5 * full.rms + std::abs(full.limit - reduced.limit);
    e.fitted = true;
    return e;
  }
  const std::size_t tail = std::min<std::size_t>(3, points.size());
  double lo = points.back().value, hi = lo;
  for (std::size_t i = points.size() - tail; i < points.size(); ++i) {
    lo = std::min(lo, points[i].value);
    hi = std::max(hi, points[i].value);
  }
  e.limit = points.back().value;
  e.error = hi - lo;
  return e;
}

ConvergenceReport make_report(std::vector<double> schedule, std::vector<double> values) {
  ConvergenceReport r;
  std::vector<SchedulePoint> pts;
  for (std::size_t i = 0; i < schedule.size(); ++i) {
    pts.push_back({schedule[i], values[i]});
    r.running_fit.push_back(pts.size() >= 4 ? extrapolate(pts).limit : values[i]);
  }
  const auto e = extrapolate(pts);
  r.limit = e.limit;
  r.error_estimate = e.error;
  if (!e.fitted) r.model = "last value plus spread of the last three (fit ill-conditioned)";
  r.schedule = std::move(schedule);
  r.values = std::move(values);
  return r;
}

std::vector<double> geometric_schedule(double t0, double ratio, std::size_t count) {
  if (!(t0 > 0.0) || !(ratio > 0.0 && ratio < 1.0)) {
    throw Error(ErrorCode::DomainError, "schedule needs t0 > 0 and ratio in (0, 1)");
  }
  std::vector<double> s(count);
  for (std::size_t k = 0; k < count; ++k) s[k] = t0 * std::pow(ratio, static_cast<double>(k));
  return s;
}

}  // namespace asa
