#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "elastica/generators.hpp"
#include "elastica/inequalities.hpp"
#include "elastica/procedures.hpp"

using namespace elastica;

namespace {
const double pi3 = kPi * kPi * kPi;
}

TEST_CASE("main inequality: circle equality, stadium strict") {
  auto rc = check_main(make_circle(1.0));
  CHECK(rc.satisfied);
  CHECK(std::abs(rc.slack) < 1e-10);

  auto rs = check_main(make_stadium(1.0, 1.0));
  CHECK(rs.satisfied);
  CHECK(rs.lhs == doctest::Approx((kPi + 2.0) * kPi * kPi).epsilon(1e-12));
  CHECK(rs.slack > 10.0);
}

TEST_CASE("gage: equality on the circle, holds on the stadium, fails on the bone") {
  auto rc = check_gage(make_circle(2.0));
  CHECK(rc.satisfied);
  CHECK(std::abs(rc.slack) < 1e-10);

  auto rs = check_gage(make_stadium(1.0, 1.0));
  CHECK(rs.satisfied);
  CHECK(rs.lhs == doctest::Approx(kTwoPi).epsilon(1e-12));
  CHECK(rs.rhs == doctest::Approx(kPi * (kTwoPi + 2.0) / (kPi + 2.0)).epsilon(1e-12));

  auto rb = check_gage(make_figure1_family(10));
  CHECK(!rb.satisfied);
  CHECK(rb.expected_violation);  // nonconvex: a first-class result
}

TEST_CASE("fixed length bound") {
  auto rc = check_fixed_length(make_circle(0.5));
  CHECK(rc.satisfied);
  CHECK(std::abs(rc.slack) < 1e-10);
  auto rs = check_fixed_length(make_stadium(1.0, 1.0));
  CHECK(rs.lhs == doctest::Approx((kTwoPi + 2.0) * kPi).epsilon(1e-12));
  CHECK(rs.satisfied);
}

TEST_CASE("deficits: circle zero, stadium closed form") {
  auto dc = deficits(make_circle(1.0));
  CHECK(std::abs(dc.length_deficit) < 1e-12);
  CHECK(std::abs(dc.elastic_deficit) < 1e-12);
  CHECK(dc.report.satisfied);

  auto ds = deficits(make_stadium(1.0, 1.0));
  const double L = kTwoPi + 2.0;
  const double A = kPi + 2.0;
  CHECK(ds.length_deficit ==
        doctest::Approx((L - std::sqrt(4.0 * kPi * A)) / std::sqrt(4.0 * kPi * A)).epsilon(1e-12));
  CHECK(ds.elastic_deficit == doctest::Approx(1.0 / kPi).epsilon(1e-12));
  CHECK(ds.report.satisfied);
}

TEST_CASE("radii: circle, stadium, biarc ellipse") {
  auto rc = compute_radii(make_circle(2.0));
  CHECK(rc.inradius == doctest::Approx(2.0).epsilon(1e-3));
  CHECK(rc.outer_radius == doctest::Approx(2.0).epsilon(1e-3));

  auto rs = compute_radii(make_stadium(1.0, 1.0));
  CHECK(rs.inradius == doctest::Approx(1.0).epsilon(1e-3));
  CHECK(rs.outer_radius == doctest::Approx(1.5).epsilon(1e-3));

  auto re = compute_radii(make_biarc_ellipse(2.0, 1.0, 96));
  CHECK(re.outer_radius == doctest::Approx(2.0).epsilon(1e-3));
  CHECK(re.inradius == doctest::Approx(1.0).epsilon(1e-3));
}

TEST_CASE("enomoto and the improved bound") {
  ArcSpline c = make_circle(1.0);
  auto radii = compute_radii(c);
  auto r1 = check_enomoto(c, radii);
  auto r2 = check_bonnesen_improved(c, radii);
  CHECK(r1.satisfied);
  CHECK(r2.satisfied);
  CHECK(std::abs(r1.lhs) < 1e-10);  // both sides vanish for the circle

  ArcSpline st = make_stadium(1.0, 1.0);
  auto rst = compute_radii(st);
  auto e1 = check_enomoto(st, rst);
  auto e2 = check_bonnesen_improved(st, rst);
  CHECK(e1.satisfied);
  CHECK(e2.satisfied);
  CHECK(e1.lhs == doctest::Approx(kTwoPi).epsilon(1e-9));
  // the improved bound is the stronger one when R > r
  CHECK(e2.rhs > e1.rhs);
  CHECK(e2.rhs == doctest::Approx(std::pow(kPi, 4) * 0.25 / std::pow(kTwoPi + 2.0, 2))
                     .epsilon(1e-2));
}

TEST_CASE("two convex bound: symmetric unit circles") {
  ArcSpline o1 = make_circle(1.0, Vec2(0, 0));
  ArcSpline o2 = make_circle(1.0, Vec2(5, 0));
  auto rep = two_convex_bound(o1, o2, kPi / 2.0, kPi / 2.0);
  CHECK(rep.satisfied);
  CHECK(rep.lhs == doctest::Approx(2.0 * pi3).epsilon(1e-12));
}

TEST_CASE("two convex bound: degenerate second set stays above pi^3") {
  // shrink the second disk: E2 grows as 1/r, area falls as r^2
  for (double r : {1.0, 0.5, 0.1, 0.02}) {
    ArcSpline o1 = make_circle(1.0);
    ArcSpline o2 = make_circle(r, Vec2(10, 0));
    auto rep = two_convex_bound(o1, o2, kPi / 2.0, kPi / (2.0 * r));
    CHECK(rep.satisfied);
  }
}

TEST_CASE("euler-lagrange residual: circle stationary, ellipse not") {
  auto circle = sample_ellipse(1.0, 1.0, 4096);
  auto res = euler_lagrange_residual(circle);
  CHECK(res.variance < 1e-8);
  CHECK(res.mean == doctest::Approx(0.5).epsilon(1e-4));  // k^3/2 = 1/2 at rho = 1

  auto rho2 = sample_ellipse(2.0, 2.0, 4096);
  auto res2 = euler_lagrange_residual(rho2);
  CHECK(res2.mean == doctest::Approx(0.5 / 8.0).epsilon(1e-4));  // rho^-3 / 2

  auto ell = sample_ellipse(2.0, 1.0, 4096);
  auto res3 = euler_lagrange_residual(ell);
  CHECK(res3.variance > 1e-3);
}

TEST_CASE("euler-lagrange residual: consistency under refinement") {
  auto coarse = euler_lagrange_residual(sample_ellipse(1.0, 1.0, 512));
  auto fine = euler_lagrange_residual(sample_ellipse(1.0, 1.0, 4096));
  CHECK(coarse.variance < 1e-8);
  CHECK(fine.variance < 1e-8);
  CHECK(std::abs(fine.mean - 0.5) <= std::abs(coarse.mean - 0.5) + 1e-12);
}

TEST_CASE("reports invariant under rigid motion and scaling") {
  ArcSpline st = make_stadium(1.0, 2.0);
  RigidMotion m{1.1, Vec2(-4.0, 2.5)};
  ArcSpline moved = transformed(st, m);
  CHECK(check_main(moved).lhs == doctest::Approx(check_main(st).lhs).epsilon(1e-10));
  CHECK(check_fixed_length(moved).lhs ==
        doctest::Approx(check_fixed_length(st).lhs).epsilon(1e-10));
  // dimensionless combinations survive scaling
  ArcSpline big = scaled(st, 3.0);
  CHECK(check_main(big).lhs == doctest::Approx(check_main(st).lhs).epsilon(1e-10));
  auto d0 = deficits(st);
  auto d1 = deficits(big);
  CHECK(d1.length_deficit == doctest::Approx(d0.length_deficit).epsilon(1e-10));
  CHECK(d1.elastic_deficit == doctest::Approx(d0.elastic_deficit).epsilon(1e-10));
}
