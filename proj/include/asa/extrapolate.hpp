#pragma once

// Limits t -> 0 from finite geometric schedules.

#include <cstddef>
#include <span>
#include <string>
#include <vector>

namespace asa {

struct SchedulePoint {
  double t = 0.0;
  double value = 0.0;
};

struct Extrapolation {
  double limit = 0.0;
  double error = 0.0;
  bool fitted = false;  // false when the fallback (last value plus spread) was used
};

/// Least-squares fit value = L + a t^(1/3) + b t^(2/3) over the last (at most
/// six) points. The error estimate is the scaled RMS residual plus the shift
/// in L when the oldest point of the window is dropped. Needs >= 4 points with
/// t strictly decreasing and positive (DomainError otherwise).
Extrapolation extrapolate(std::span<const SchedulePoint> points);

inline constexpr const char* kExtrapolationModel = "L + a*t^(1/3) + b*t^(2/3), least squares over last <= 6 points";

struct ConvergenceReport {
  std::vector<double> schedule;
  std::vector<double> values;
  /// extrapolated limit using the points up to each index (the value itself
  /// until four points are available)
  std::vector<double> running_fit;
  double limit = 0.0;
  double error_estimate = 0.0;
  std::string model = kExtrapolationModel;
};

ConvergenceReport make_report(std::vector<double> schedule, std::vector<double> values);

/// t_k = t0 * ratio^k, k = 0..count-1.
std::vector<double> geometric_schedule(double t0, double ratio, std::size_t count);

}  // namespace asa
