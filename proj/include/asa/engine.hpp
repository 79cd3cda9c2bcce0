#pragma once

// Affine surface area three ways: the curvature integral, the volume-gap
// ratio against the disk, and the constant-normalized volume gap.

#include <optional>
#include <span>
#include <vector>

#include "asa/ball.hpp"
#include "asa/constructions.hpp"
#include "asa/extrapolate.hpp"

namespace asa {

/// pi^(k/2) / Gamma(k/2 + 1)
double unit_ball_volume(int k);

struct ConstantsTable {
  int n = 2;
  double ball_volume = 0.0;        // |B^n|
  double ball_volume_facet = 0.0;  // |B^(n-1)|
  double c = 0.0;                  // floating and convolution
  double d = 0.0;                  // illumination
  double e = 0.0;                  // Santalo
};

/// Throws DomainError for n < 2.
ConstantsTable constants(int n);

/// Planar normalizing constant for a family (c_2, c_2, e_2, d_2).
double family_constant(ConstructionKind kind);

enum class AsaMethod { DirectIntegral, VolumeRatio, ConstantNormalized };

struct AsaEstimate {
  double value = 0.0;
  AsaMethod method = AsaMethod::DirectIntegral;
  std::optional<ConstructionKind> kind;
  double error_estimate = 0.0;
};

/// Periodic trapezoid of rho^(2/3) on the support grid; exactly 0 for polygons.
AsaEstimate asa_direct(const ConvexBody& k);
/// Adaptive Simpson quadrature of rho^(2/3) on the trigonometric interpolant,
/// independent of the grid trapezoid.
double asa_adaptive(const SmoothBody& k, double tol = 1e-11);

struct ConvergenceRow {
  double t = 0.0;
  double gap = 0.0;        // volume_gap(K, kind, t, N)
  double ball_gap = 0.0;   // ball_gap(kind, t)
  double ratio = 0.0;      // gap / ball_gap
  double estimate = 0.0;   // family_constant * gap / t^(2/3)
};

std::vector<ConvergenceRow> convergence_rows(const ConvexBody& k, ConstructionKind kind,
                                             std::span<const double> schedule,
                                             std::size_t n = kDefaultDirections);

/// Ratios volume_gap / ball_gap; the limit is as(K) / (2 pi).
ConvergenceReport theorem3_ratio(const ConvexBody& k, ConstructionKind kind, std::span<const double> schedule,
                                 std::size_t n = kDefaultDirections);
/// family_constant * volume_gap / t^(2/3); the limit is as(K).
ConvergenceReport corollary4_estimate(const ConvexBody& k, ConstructionKind kind,
                                      std::span<const double> schedule, std::size_t n = kDefaultDirections);
ConvergenceReport ratio_report(const std::vector<ConvergenceRow>& rows);
ConvergenceReport estimate_report(const std::vector<ConvergenceRow>& rows);

/// Boundary integrand <x, N> (1 - (|x_t| / |x|)^2) / (2 ball_gap(kind, t)),
/// with x_t the point where the segment [0, x] (the ray through x for the
/// outer family) meets the boundary of K_t. The origin must be interior.
double local_integrand(const ConvexBody& k, const BoundarySample& x, ConstructionKind kind, double t);

/// Schedule of local_integrand values at the boundary point with normal
/// angle theta. The limit is rho(theta)^(-1/3) / (2 pi) where the boundary
/// is curved and 0 on flat pieces.
ConvergenceReport local_integrand_limit(const SmoothBody& k, double theta, ConstructionKind kind,
                                        std::span<const double> schedule);
ConvergenceReport local_integrand_limit(const ConvexBody& k, const BoundarySample& x, ConstructionKind kind,
                                        std::span<const double> schedule);

}  // namespace asa
