#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "elastica/flows.hpp"
#include "elastica/generators.hpp"

using namespace elastica;

TEST_CASE("csf_step: circle shrinks at the exact rate") {
  PolyCurve c = make_poly(sample_ellipse(1.0, 1.0, 512));
  const double h = poly_length(c) / 512;
  const double dt = 0.2 * h * h;
  PolyCurve next = csf_step(c, dt);
  // rho(t) = sqrt(rho0^2 - 2t) for the circle
  const double expect = std::sqrt(1.0 - 2.0 * dt);
  const double got = next.points[0].norm();
  CHECK(got == doctest::Approx(expect).epsilon(1e-6));
  // dt above the stability threshold is rejected
  CHECK_THROWS(csf_step(c, h * h));
}

TEST_CASE("csf_run: circle follows the equality branch") {
  PolyCurve c = make_poly(sample_ellipse(1.0, 1.0, 700));
  FlowOptions opt;
  auto res = csf_run(c, opt);
  CHECK(res.completed);
  CHECK(res.max_area_rate_error < 1e-2);
  // dL/dt = -2 sqrt(pi^3 / A(t)): relative agreement 1e-3 away from the ends
  const int nr = static_cast<int>(res.records.size());
  for (int i = 2; i + 2 < nr; ++i) {
    const auto& r = res.records[i];
    CHECK(std::abs(r.dL_dt - r.bound) <= 1e-3 * std::abs(r.bound));
  }
}

TEST_CASE("csf_run: ellipse satisfies the length-rate bound and rounds off") {
  PolyCurve c = make_poly(sample_ellipse(2.0, 1.0, 700));
  auto res = csf_run(c);
  CHECK(res.completed);
  CHECK(res.bound_satisfied);
  CHECK(res.max_area_rate_error < 1e-2);
  // isoperimetric ratio decreases monotonically (within a numeric wiggle)
  double prev = std::numeric_limits<double>::infinity();
  for (const auto& r : res.records) {
    const double ratio = r.length * r.length / (4.0 * kPi * r.area);
    CHECK(ratio <= prev + 1e-9);
    prev = ratio;
  }
}

TEST_CASE("csf_run: dumbbell stays within the bound while convexifying") {
  // rounded nonconvex start: sampled bay dumbbell
  ArcSpline db = make_bay_dumbbell({});
  auto pts = sample_points(db, 48);
  PolyCurve c = make_poly(pts);
  c = resample_uniform(c, 700);
  REQUIRE(poly_simple(c));
  auto res = csf_run(c);
  CHECK(res.completed);
  CHECK(res.bound_satisfied);
  CHECK(res.max_area_rate_error < 1e-2);
}
