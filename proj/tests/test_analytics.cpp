// Ball closed forms, extrapolation and the affine surface area engine.
// Expected values are frozen from tests/oracles/oracles.py (mpmath, 40 digits).

#include <doctest.h>

#include <random>

#include "asa/ball.hpp"
#include "asa/engine.hpp"
#include "asa/extrapolate.hpp"

using namespace asa;

namespace {

constexpr double kFloatingGap1e6 = 4.116543067515241e-4;
constexpr double kSantaloGap1e6 = 6.738808595698141e-4;
constexpr double kC2 = 1.5262856567377758;
constexpr double kD2 = 0.9614997135382723;
constexpr double kE2 = 0.9323881540708232;
constexpr double kFloatingConstant = 4.116650955502671;
constexpr double kIlluminationConstant = 6.534776057350833;
constexpr double kSantaloConstant = 6.738808595698141;
constexpr double kFloatingR1e3 = 0.9934438449726350;
constexpr double kTrefoilAsa = 6.020720736098619;

ErrorCode code_of(auto&& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  return ErrorCode::ParseError;
}

SmoothBody trefoil() {
  const std::vector<double> c{0.0, 0.0, 0.1};
  return SmoothBody::from_fourier(1.0, c, {});
}

}  // namespace

TEST_CASE("ball radius curves") {
  CHECK(std::abs(ball_radius(ball_curve(ConstructionKind::Floating), 0.1) - 0.8567581563109013) < 1e-13);
  CHECK(std::abs(ball_radius(ball_curve(ConstructionKind::Floating), 1e-3) - kFloatingR1e3) < 1e-13);
  CHECK(std::abs(ball_radius(ball_curve(ConstructionKind::Santalo), 1.0 / (8.0 * kPi)) - std::sqrt(3.0) / 2.0) < 1e-13);
  CHECK(std::abs(ball_radius(ball_curve(ConstructionKind::Illumination), 0.010311572130015462) - 1.05) < 1e-13);
  CHECK(std::abs(ball_radius(ball_curve(ConstructionKind::Convolution), 0.6141848493043784) - 0.5) < 1e-13);
  for (auto kind : kAllKinds) {
    CHECK(ball_radius(ball_curve(kind, 2.5), 0.0) == 2.5);
    CHECK(ball_gap(kind, 0.0) == 0.0);
  }
  CHECK(code_of([] { ball_radius(ball_curve(ConstructionKind::Floating), 2.0); }) == ErrorCode::DomainError);
  CHECK(code_of([] { ball_radius(ball_curve(ConstructionKind::Santalo), -1.0); }) == ErrorCode::DomainError);
}

TEST_CASE("ball curves are monotone") {
  for (auto kind : kAllKinds) {
    const auto c = ball_curve(kind, 1.3);
    const double top = std::min(c.t_max, 10.0);
    double prev = c.r;
    for (int i = 1; i < 100; ++i) {
      const double f = ball_radius(c, top * i / 100.0);
      if (orientation(kind) == Orientation::Inner) {
        CHECK(f < prev);
      } else {
        CHECK(f > prev);
      }
      prev = f;
    }
  }
}

TEST_CASE("ball gaps and limit constants") {
  CHECK(std::abs(ball_gap(ConstructionKind::Santalo, 1e-6) - kSantaloGap1e6) < 1e-15);
  CHECK(std::abs(ball_gap(ConstructionKind::Floating, 1e-6) - kFloatingGap1e6) < 1e-15);
  CHECK(std::abs(ball_gap(ConstructionKind::Floating, 1e-6) / 4.1167e-4 - 1.0) < 0.01);
  CHECK(std::abs(ball_limit_constant_exact(ConstructionKind::Floating) - kFloatingConstant) < 1e-13);
  CHECK(std::abs(ball_limit_constant_exact(ConstructionKind::Convolution) - kFloatingConstant) < 1e-13);
  CHECK(std::abs(ball_limit_constant_exact(ConstructionKind::Santalo) - kSantaloConstant) < 1e-13);
  CHECK(std::abs(ball_limit_constant_exact(ConstructionKind::Illumination) - kIlluminationConstant) < 1e-13);
  for (auto kind : kAllKinds) {
    CAPTURE(to_string(kind));
    const auto e = ball_limit_constant(kind);
    CHECK(std::abs(e.limit / ball_limit_constant_exact(kind) - 1.0) < 1e-4);
    CHECK(family_constant(kind) * ball_limit_constant_exact(kind) == doctest::Approx(kTwoPi).epsilon(1e-12));
  }
  CHECK(std::abs(ball_limit_constant(ConstructionKind::Santalo).limit - kSantaloConstant) < 1e-6);
}

TEST_CASE("numerical constructions agree with the ball curves") {
  const ConvexBody disk = SmoothBody::disk(1.0);
  for (auto kind : kAllKinds) {
    for (double t : {1e-2, 1e-3, 1e-4}) {
      CAPTURE(to_string(kind));
      CAPTURE(t);
      const auto p = construct(disk, kind, t, 720).polygon();
      double mean = 0.0;
      for (const auto& v : p.vertices()) mean += norm(v);
      mean /= static_cast<double>(p.size());
      CHECK(std::abs(mean - ball_radius(ball_curve(kind), t)) < 2e-4);
    }
  }
}

TEST_CASE("radius scaling under dilation") {
  // f_r(r^2 t) = r f_1(t), so the ratio tends to r^(-1/3)
  const auto schedule = geometric_schedule(1e-2, 0.1, 7);
  for (auto kind : kAllKinds) {
    const auto one = remark2_scaling(kind, 1.0, schedule);
    for (double v : one.values) CHECK(v == doctest::Approx(1.0).epsilon(1e-12));
    const auto eight = remark2_scaling(kind, 8.0, schedule);
    CHECK(std::abs(eight.limit - 0.5) < 0.005);
  }
}

TEST_CASE("extrapolation") {
  std::vector<SchedulePoint> flat;
  for (int k = 0; k < 6; ++k) flat.push_back({std::pow(10.0, -3 - k), 7.0});
  const auto c = extrapolate(flat);
  CHECK(c.limit == doctest::Approx(7.0).epsilon(1e-14));
  CHECK(c.error < 1e-12);

  std::vector<SchedulePoint> pts;
  for (int k = 3; k <= 8; ++k) {
    const double t = std::pow(10.0, -k);
    pts.push_back({t, 1.0 + std::cbrt(t)});
  }
  const auto e = extrapolate(pts);
  CHECK(std::abs(e.limit - 1.0) < 1e-6);
  CHECK(e.error < 1e-12);

  std::vector<SchedulePoint> model;
  for (int k = 0; k < 8; ++k) {
    const double t = 1e-2 * std::pow(0.25, k);
    model.push_back({t, -2.0 + 3.0 * std::cbrt(t) - 5.0 * std::cbrt(t * t)});
  }
  const auto m = extrapolate(model);
  CHECK(std::abs(m.limit + 2.0) < 1e-12);
  CHECK(m.error < 1e-12);

  CHECK(code_of([&] { extrapolate(std::span(pts).first(3)); }) == ErrorCode::DomainError);
  std::vector<SchedulePoint> up = pts;
  std::swap(up[0], up[1]);
  CHECK(code_of([&] { extrapolate(up); }) == ErrorCode::DomainError);

  const auto s = geometric_schedule(1e-2, 0.25, 8);
  REQUIRE(s.size() == 8);
  CHECK(s.back() == doctest::Approx(1e-2 * std::pow(0.25, 7)));
}

TEST_CASE("constants table") {
  const auto t = constants(2);
  CHECK(std::abs(t.c - kC2) < 1e-14);
  CHECK(std::abs(t.d - kD2) < 1e-14);
  CHECK(std::abs(t.e - kE2) < 1e-14);
  CHECK(t.ball_volume == doctest::Approx(kPi));
  CHECK(t.ball_volume_facet == doctest::Approx(2.0));
  const auto t3 = constants(3);
  CHECK(t3.c == doctest::Approx(2.0 * std::sqrt(kPi / 4.0)));
  CHECK(unit_ball_volume(3) == doctest::Approx(4.0 * kPi / 3.0));
  CHECK(code_of([] { constants(1); }) == ErrorCode::DomainError);
}

TEST_CASE("direct affine surface area") {
  CHECK(std::abs(asa_direct(ConvexBody(SmoothBody::disk(1.0))).value - kTwoPi) < 1e-10);
  CHECK(asa_direct(ConvexBody(Polygon::regular(6, 1.0))).value == 0.0);
  CHECK(std::abs(asa_direct(ConvexBody(SmoothBody::ellipse(2.0, 0.5))).value - kTwoPi) < 1e-8);
  CHECK(std::abs(asa_adaptive(SmoothBody::ellipse(2.0, 0.5)) - kTwoPi) < 1e-8);
  CHECK(std::abs(asa_direct(ConvexBody(trefoil())).value - kTrefoilAsa) < 1e-10);
  CHECK(std::abs(asa_adaptive(trefoil()) - kTrefoilAsa) < 1e-10);
  for (double r : {0.25, 1.0, 8.0}) {
    CHECK(std::abs(asa_direct(ConvexBody(SmoothBody::disk(r))).value - kTwoPi * std::cbrt(r * r)) < 1e-9);
  }
}

TEST_CASE("affine invariance and the isoperimetric bound") {
  std::mt19937_64 rng(11);
  std::uniform_real_distribution<double> u(-1.5, 1.5);
  const ConvexBody k = trefoil();
  const double base = asa_direct(k).value;
  int used = 0;
  while (used < 20) {
    const double a11 = u(rng), a12 = u(rng), a21 = u(rng), a22 = u(rng);
    const double det = a11 * a22 - a12 * a21;
    if (std::abs(det) < 0.25 * (a11 * a11 + a12 * a12 + a21 * a21 + a22 * a22)) continue;
    ++used;
    const ConvexBody img = transform(k, AffineMap2(a11, a12, a21, a22));
    const double v = asa_direct(img).value;
    CHECK(v == doctest::Approx(std::cbrt(std::abs(det)) * base).epsilon(1e-6));
    CHECK(v <= kTwoPi * std::cbrt(area(img) / kPi) * (1.0 + 1e-6));
  }
}

TEST_CASE("volume gap ratios on the disk and the ellipse") {
  const auto schedule = geometric_schedule(1e-2, 0.25, 6);
  const ConvexBody disk = SmoothBody::disk(1.0);
  for (auto kind : kAllKinds) {
    CAPTURE(to_string(kind));
    const auto r = theorem3_ratio(disk, kind, schedule, 360);
    for (double v : r.values) CHECK(std::abs(v - 1.0) < 2e-3);
  }
  const auto e = theorem3_ratio(ConvexBody(SmoothBody::ellipse(2.0, 0.5)), ConstructionKind::Floating, schedule, 720);
  CHECK(std::abs(e.limit - 1.0) < 0.01);
  const auto s = corollary4_estimate(disk, ConstructionKind::Santalo, schedule, 360);
  for (double v : s.values) CHECK(std::abs(v - kTwoPi) < 1e-6);
}

TEST_CASE("polygons have vanishing limits") {
  const ConvexBody sq = Polygon::box(-1, -1, 1, 1);
  const auto schedule = geometric_schedule(1e-3, 0.1, 5);
  const auto f = theorem3_ratio(sq, ConstructionKind::Floating, schedule, 720);
  for (std::size_t i = 1; i < f.values.size(); ++i) CHECK(f.values[i] < f.values[i - 1]);
  CHECK(f.values.back() < 0.05);
  const auto il = corollary4_estimate(sq, ConstructionKind::Illumination, schedule, 720);
  for (std::size_t i = 1; i < il.values.size(); ++i) CHECK(il.values[i] < il.values[i - 1]);
}

TEST_CASE("local integrand limits") {
  const auto schedule = geometric_schedule(1e-3, 0.1, 5);
  const auto d = local_integrand_limit(SmoothBody::disk(1.0), 0.7, ConstructionKind::Floating, schedule);
  CHECK(std::abs(d.limit * kTwoPi - 1.0) < 0.01);
  const auto e = local_integrand_limit(SmoothBody::ellipse(2.0, 0.5), 0.0, ConstructionKind::Floating, schedule);
  CHECK(std::abs(e.limit * kPi - 1.0) < 0.02);
  // flat point: midpoint of a square edge
  const ConvexBody sq = Polygon::box(-1, -1, 1, 1);
  const BoundarySample mid{{1.0, 0.0}, {1.0, 0.0}, 0.0};
  const auto f = local_integrand_limit(sq, mid, ConstructionKind::Floating, geometric_schedule(1e-3, 0.1, 5));
  CHECK(f.values.back() < 0.02 / kTwoPi);
  CHECK(code_of([] { local_integrand(ConvexBody(Polygon::box(1, 1, 2, 2)), {{2.0, 1.5}, {1.0, 0.0}, 0.0},
                                     ConstructionKind::Floating, 1e-3); }) == ErrorCode::DomainError);
}
