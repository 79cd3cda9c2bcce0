#pragma once

// Closed forms for centered disks under the four families: the radius curve
// f_r(t), the area gap | |B_r| - |B_r,t| | and its t^(2/3) limit constant.

#include <limits>
#include <span>

#include "asa/constructions.hpp"
#include "asa/extrapolate.hpp"

namespace asa {

struct BallCurve {
  ConstructionKind kind = ConstructionKind::Floating;
  double r = 1.0;
  double t_max = 0.0;  // f_r is defined on [0, t_max)
};

/// Floating/Convolution: pi r^2 / 2; Santalo: r^2 / pi; Illumination: infinity.
BallCurve ball_curve(ConstructionKind kind, double r = 1.0);

/// |r - f_r(t)|, evaluated without cancellation (series for small angles).
double ball_deficit(const BallCurve& c, double t);
/// f_r(t). Throws DomainError outside [0, t_max).
double ball_radius(const BallCurve& c, double t);
/// pi |r^2 - f_r(t)^2|.
double ball_gap(const BallCurve& c, double t);
double ball_gap(ConstructionKind kind, double t);

/// lim ball_gap(kind, t) / t^(2/3), closed form.
double ball_limit_constant_exact(ConstructionKind kind);
/// The same limit measured by extrapolating ball_gap / t^(2/3) along a
/// geometric schedule.
Extrapolation ball_limit_constant(ConstructionKind kind);

/// Ratios |r - f_r(t)| / |1 - f_1(t)| along the schedule with their
/// extrapolated limit. By the scaling f_r(r^2 t) = r f_1(t) the limit is
/// r^(-1/3) for every family.
ConvergenceReport remark2_scaling(ConstructionKind kind, double r, std::span<const double> schedule);

}  // namespace asa
