#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "elastica/convex_hull.hpp"
#include "elastica/generators.hpp"
#include "elastica/inequalities.hpp"
#include "oracles.hpp"

using namespace elastica;

TEST_CASE("canonical generators produce valid curves with known metrics") {
  ArcSpline c = make_circle(1.0);
  CHECK(validate(c).valid());
  CHECK(length(c) == doctest::Approx(kTwoPi).epsilon(1e-13));
  CHECK(signed_area(c) == doctest::Approx(kPi).epsilon(1e-13));
  CHECK(elastic_energy(c) == doctest::Approx(kPi).epsilon(1e-13));

  ArcSpline st = make_stadium(1.0, 1.0);
  CHECK(validate(st).valid());
  CHECK(signed_area(st) == doctest::Approx(kPi + 2.0).epsilon(1e-13));
  CHECK(elastic_energy(st) == doctest::Approx(kPi).epsilon(1e-13));

  auto sq = make_rounded_polygon({{0, 0}, {2, 0}, {2, 2}, {0, 2}}, 0.5);
  CHECK(validate(sq).valid());
}

TEST_CASE("figure-1 family: constant energy and area, growing diameter") {
  const double E1 = elastic_energy(make_figure1_family(1));
  const double A1 = signed_area(make_figure1_family(1));
  double prev_diam = 0.0;
  double prev_hull_product = 0.0;
  for (int n = 1; n <= 10; ++n) {
    ArcSpline g = make_figure1_family(n);
    REQUIRE(validate(g).valid());
    CHECK(std::abs(elastic_energy(g) - E1) < 1e-12);
    CHECK(std::abs(signed_area(g) - A1) < 1e-9);

    // diameter via the bounding box of samples
    auto pts = sample_points(g, 8);
    Vec2 lo = pts[0], hi = pts[0];
    for (const auto& q : pts) {
      lo = lo.cwiseMin(q);
      hi = hi.cwiseMax(q);
    }
    const double diam = (hi - lo).norm();
    CHECK(diam > prev_diam);
    prev_diam = diam;

    ArcSpline h = convex_hull(g);
    const double hull_product =
        signed_area(h) * elastic_energy(h) * elastic_energy(h);
    CHECK(hull_product > prev_hull_product);
    prev_hull_product = hull_product;
  }
}

TEST_CASE("figure-1 family: Gage fails for large n") {
  int n_star = -1;
  for (int n = 1; n <= 10; ++n) {
    ArcSpline g = make_figure1_family(n);
    auto rep = check_gage(g);
    if (!rep.satisfied && n_star < 0) n_star = n;
  }
  CHECK(n_star > 1);   // holds for small n
  CHECK(n_star <= 10); // violated within the family range
}

TEST_CASE("figure-1 family: infeasible area reports the horizon") {
  Figure1Params p;
  // a target area smaller than the blobs can ever shed is infeasible
  CHECK_THROWS(make_figure1_family(1, 1.0, p));
  CHECK(figure1_max_feasible_n(-1.0, p) >= 10);
}

TEST_CASE("biarc fit: circle samples reproduce the circle") {
  std::vector<SampleTangent> pts(32);
  for (int i = 0; i < 32; ++i) {
    const double th = kTwoPi * i / 32;
    pts[i].point = unit_from_angle(th);
    pts[i].tangent = perp(unit_from_angle(th));
  }
  ArcSpline fit = biarc_fit(pts);
  CHECK(validate(fit).valid());
  CHECK(std::abs(elastic_energy(fit) - kPi) < 1e-6);
  CHECK(std::abs(signed_area(fit) - kPi) < 1e-6);
}

TEST_CASE("biarc fit: collinear samples degrade to segments") {
  std::vector<SampleTangent> pts;
  // a thin rectangle loop sampled at its corners with edge tangents
  const Vec2 quad[4] = {{0, 0}, {4, 0}, {4, 1}, {0, 1}};
  for (int i = 0; i < 4; ++i) {
    const Vec2 d = (quad[(i + 1) % 4] - quad[i]).normalized();
    pts.push_back({quad[i], d});
    pts.push_back({quad[i] + 0.5 * (quad[(i + 1) % 4] - quad[i]), d});
  }
  ArcSpline fit = biarc_fit(pts);
  int segments = 0;
  for (const auto& p : fit.primitives)
    if (std::holds_alternative<Segment>(p)) ++segments;
  CHECK(segments >= 4);
}

TEST_CASE("biarc ellipse: energy close to the quadrature oracle") {
  ArcSpline e = make_biarc_ellipse(2.0, 1.0, 160);
  REQUIRE(validate(e).valid());
  // oracle: adaptive-dense quadrature of k^2/2 on the exact ellipse
  const double a = 2.0, b = 1.0;
  const int N = 400000;
  double E_exact = 0.0;
  for (int i = 0; i < N; ++i) {
    const double u = kTwoPi * (i + 0.5) / N;
    const double g = std::sqrt(a * a * std::sin(u) * std::sin(u) +
                               b * b * std::cos(u) * std::cos(u));
    const double k = a * b / (g * g * g);
    E_exact += 0.5 * k * k * g * (kTwoPi / N);
  }
  CHECK(std::abs(elastic_energy(e) - E_exact) < 1e-3 * E_exact);
}

TEST_CASE("random simple curves: deterministic, valid, near-circle at low complexity") {
  ArcSpline a = make_random_simple(42, 2);
  ArcSpline b = make_random_simple(42, 2);
  REQUIRE(validate(a).valid());
  CHECK(a.size() == b.size());
  CHECK(signed_area(a) == doctest::Approx(signed_area(b)).epsilon(1e-15));

  ArcSpline c0 = make_random_simple(7, 0);
  const double AE2 = signed_area(c0) * elastic_energy(c0) * elastic_energy(c0);
  CHECK(AE2 == doctest::Approx(kPi * kPi * kPi).epsilon(0.01));
}

TEST_CASE("random batch is simple and satisfies the main inequality") {
  const double pi3 = kPi * kPi * kPi;
  for (std::uint64_t seed = 1; seed <= 60; ++seed) {
    ArcSpline c = make_random_simple(seed, 1 + seed % 4);
    REQUIRE(validate(c).valid());
    const double AE2 = signed_area(c) * elastic_energy(c) * elastic_energy(c);
    CHECK(AE2 >= pi3 * (1.0 - 1e-9));
  }
}

TEST_CASE("gear and dumbbell generators validate across parameters") {
  for (int m : {3, 4, 6, 8}) {
    ArcSpline g = make_gear(m, 1.6, std::min(3.0, 2 * kPi / m + 0.8), 0.4);
    CHECK(validate(g).valid());
  }
  for (double asym : {0.0, 0.5, 1.2}) {
    DumbbellParams p;
    p.asymmetry = asym;
    CHECK(validate(make_bay_dumbbell(p)).valid());
  }
  for (double sweep : {0.5, 1.2, 2.8}) {
    CHECK(validate(make_dented_oval(1.0, 0.6, sweep)).valid());
  }
}
