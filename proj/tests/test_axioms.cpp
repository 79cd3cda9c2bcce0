#include <doctest.h>

#include <tuple>

#include "asa/axioms.hpp"

using namespace asa;

namespace {

const ConvexBody& disk() {
  static const ConvexBody d = SmoothBody::disk(1.0);
  return d;
}
const ConvexBody& square() {
  static const ConvexBody s = Polygon::box(-1, -1, 1, 1);
  return s;
}

ErrorCode code_of(auto&& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  return ErrorCode::ParseError;
}

}  // namespace

TEST_CASE("identity and nesting") {
  const double disk_ts[] = {0.0, 1e-3, 1e-2};
  CHECK(check_identity_and_monotone(disk(), "disk", ConstructionKind::Floating, disk_ts, 360).passed);
  const double ts[] = {1e-2, 1e-3, 1e-4};
  CHECK(check_identity_and_monotone(square(), "square", ConstructionKind::Santalo, ts, 360).passed);
  const auto il = check_identity_and_monotone(square(), "square", ConstructionKind::Illumination, ts, 360);
  CHECK(il.passed);
  CHECK(il.asserted);
}

TEST_CASE("affine equivariance") {
  const auto id = check_equivariance(square(), "square", ConstructionKind::Floating, AffineMap2::identity(), 1e-3, 360);
  CHECK(id.passed);
  CHECK(id.measured < 1e-9);
  CHECK(check_equivariance(disk(), "disk", ConstructionKind::Floating, AffineMap2::scaling(2.0, 0.5), 1e-3, 360).passed);
  const AffineMap2 r = AffineMap2::rotation(0.7);
  const AffineMap2 a = r.compose(AffineMap2::scaling(3.0, 1.0));
  CHECK(check_equivariance(square(), "square", ConstructionKind::Illumination, a, 1e-3, 360).passed);
}

TEST_CASE("balls go to balls") {
  CHECK(check_ball_to_ball(ConstructionKind::Floating, 1.0, 1e-3, 360).passed);
  CHECK(check_ball_to_ball(ConstructionKind::Santalo, 2.0, 1e-2, 360).passed);
  CHECK(check_ball_to_ball(ConstructionKind::Illumination, 1.0, 1e-3, 360).passed);
  CHECK(check_ball_to_ball(ConstructionKind::Convolution, 0.5, 1e-3, 360).passed);
}

TEST_CASE("monotone under inclusion") {
  const ConvexBody half = SmoothBody::disk(0.5);
  CHECK(check_containment_monotone(half, square(), "half-disk/square", ConstructionKind::Floating, 1e-3, 360).passed);
  CHECK(check_containment_monotone(square(), square(), "square/square", ConstructionKind::Santalo, 1e-3, 360).passed);
  const auto il = check_containment_monotone(half, square(), "half-disk/square", ConstructionKind::Illumination, 1e-2, 360);
  CHECK_FALSE(il.asserted);
  CHECK(code_of([&] {
          check_containment_monotone(square(), half, "square/half-disk", ConstructionKind::Floating, 1e-3, 360);
        }) == ErrorCode::NotNested);
}

TEST_CASE("shell integrals") {
  const ConvexBody d2 = SmoothBody::disk(2.0);
  CHECK(std::abs(shell_integral_outer(d2, disk(), 4096) - 3.0 * kPi) < 1e-6);
  CHECK(std::abs(shell_integral_inner(d2, disk(), 4096) - 3.0 * kPi) < 1e-6);
  CHECK(std::abs(shell_integral_outer(square(), square(), 512)) < 1e-12);
  CHECK(std::abs(shell_integral_inner(disk(), disk(), 512)) < 1e-12);
  CHECK(std::abs(shell_integral_outer(square(), disk(), 4096) - (4.0 - kPi)) < 1e-4);
  const ConvexBody half = SmoothBody::disk(0.5);
  CHECK(std::abs(shell_integral_inner(square(), half, 4096) - (4.0 - kPi / 4.0)) < 1e-4);
  CHECK(code_of([&] { shell_integral_outer(disk(), d2, 256); }) == ErrorCode::NotNested);
  const ConvexBody off = Polygon::box(1, 1, 2, 2);
  CHECK(code_of([&] { shell_integral_outer(off, off, 256); }) == ErrorCode::OriginOutside);
}

TEST_CASE("shell integrals on random nested pairs") {
  std::mt19937_64 rng(29);
  std::uniform_real_distribution<double> phase(0.0, kTwoPi), radius(0.5, 0.95);
  for (int i = 0; i < 20; ++i) {
    // outer contains the unit disk, inner lies inside it
    const Polygon outer = random_polygon_around_unit_disk(rng, 5 + i % 9, 1.8);
    const ConvexBody inner =
        i % 2 == 0 ? ConvexBody(SmoothBody::disk(0.9)) : ConvexBody(Polygon::regular(3 + i % 6, radius(rng), {}, phase(rng)));
    const double exact = outer.area() - area(inner);
    CHECK(shell_integral_outer(outer, inner, 4096) == doctest::Approx(exact).epsilon(1e-4));
    CHECK(shell_integral_inner(outer, inner, 4096) == doctest::Approx(exact).epsilon(1e-4));
  }
}

TEST_CASE("rolling radius measure bound") {
  CHECK(rolling_measure_bound(disk(), "disk", 0.5, 1024).passed);
  for (double beta : {0.25, 0.5, 0.9, 0.99}) CHECK(rolling_measure_bound(square(), "square", beta, 8192).passed);
  std::mt19937_64 rng(31);
  for (int i = 0; i < 10; ++i) {
    const Polygon p = random_polygon_around_unit_disk(rng, 6 + i, 1.6);
    for (double beta : {0.25, 0.5, 0.9}) CHECK(rolling_measure_bound(p, "random", beta, 2048).passed);
  }
  CHECK(code_of([] { rolling_measure_bound(ConvexBody(SmoothBody::disk(0.5)), "small", 0.5, 256); }) ==
        ErrorCode::NotContainingUnitBall);
}

TEST_CASE("rolling radius integrability") {
  const auto d = rolling_integrability(disk(), 0.5, 1024);
  CHECK(std::abs(d.coarse - kTwoPi) < 1e-6);
  CHECK(d.stable);
  const auto s = rolling_integrability(square(), 0.5, 2048);
  CHECK(s.stable);
  CHECK(std::abs(rolling_integrability(square(), 0.0, 512).coarse - 8.0) < 1e-12);
  CHECK(code_of([] { rolling_integrability(disk(), 1.0, 64); }) == ErrorCode::DomainError);
}

TEST_CASE("random affine maps respect their bounds") {
  std::mt19937_64 rng(5);
  for (int i = 0; i < 50; ++i) {
    const AffineMap2 a = random_affine(rng, 0.1, 10.0, 4.0, 0.2);
    CHECK(std::abs(a.det()) >= 0.1 * (1.0 - 1e-12));
    CHECK(std::abs(a.det()) <= 10.0 * (1.0 + 1e-12));
  }
}

TEST_CASE("small suite run") {
  auto zoo = body_zoo();
  REQUIRE(zoo.size() >= 5);
  std::vector<ZooBody> pick{zoo[0], zoo[2]};
  SuiteConfig cfg;
  cfg.ts = {1e-2, 1e-3};
  cfg.directions = 180;
  cfg.affine_maps = 4;
  const auto verdicts = run_suite(pick, cfg);
  CHECK(all_asserted_pass(verdicts));
  bool unasserted = false;
  for (const auto& v : verdicts) unasserted |= !v.asserted;
  CHECK(unasserted);
  for (std::size_t i = 1; i < verdicts.size(); ++i) {
    const auto& a = verdicts[i - 1];
    const auto& b = verdicts[i];
    CHECK(std::tie(a.axiom_id, a.body_id) <= std::tie(b.axiom_id, b.body_id));
  }
  CHECK(verdict_table(verdicts).find("PASS") != std::string::npos);
}
