#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "elastica/arc_spline.hpp"
#include "elastica/arc_structure.hpp"
#include "elastica/convex_hull.hpp"
#include "elastica/generators.hpp"
#include "oracles.hpp"

using namespace elastica;

namespace {

// Teardrop in class C: two unit circles tangent at the origin carry the cusp
// branches (sweep pi/3 each, cw), closed by a ccw cap of sweep 5*pi/3.
ArcSpline make_drop() {
  ArcSpline c;
  c.curve_class = CurveClass::C;
  const double s = kPi / 3.0;
  c.primitives.push_back(Arc{{0.0, 1.0}, 1.0, -kPi / 2.0, -kPi / 2.0 - s, false});
  c.primitives.push_back(Arc{{-std::sqrt(3.0), 0.0}, 1.0, kPi / 6.0, 11.0 * kPi / 6.0, true});
  c.primitives.push_back(Arc{{0.0, -1.0}, 1.0, kPi / 2.0 + s, kPi / 2.0, false});
  return c;
}

ArcSpline make_figure_eight() {
  ArcSpline c;
  c.primitives.push_back(Arc{{1.0, 0.0}, 1.0, kPi, 2.0 * kPi, true});
  c.primitives.push_back(Arc{{1.0, 0.0}, 1.0, 0.0, kPi, true});
  c.primitives.push_back(Arc{{-1.0, 0.0}, 1.0, 0.0, -kPi, false});
  c.primitives.push_back(Arc{{-1.0, 0.0}, 1.0, kPi, 0.0, false});
  return c;
}

}  // namespace

TEST_CASE("validate: canonical curves") {
  CHECK(validate(make_circle(1.0)).valid());
  CHECK(validate(make_stadium(1.0, 1.0)).valid());
  CHECK(validate(make_drop()).valid());

  // one arc reversed breaks tangency at two joints
  ArcSpline bad = make_circle(1.0);
  auto& a = std::get<Arc>(bad.primitives[1]);
  std::swap(a.start_angle, a.end_angle);
  a.ccw = false;
  auto rep = validate(bad);
  CHECK(!rep.valid());

  // figure-eight from two tangent circles is not simple
  ArcSpline eight = make_figure_eight();
  SimplicityViolation v;
  CHECK(!is_simple(eight, &v));
  CHECK(!validate(eight).valid());
}

TEST_CASE("length closed forms") {
  CHECK(length(make_circle(1.0)) == doctest::Approx(kTwoPi).epsilon(1e-12));
  CHECK(length(make_stadium(1.0, 1.0)) == doctest::Approx(kTwoPi + 2.0).epsilon(1e-12));
  // quarter arc of radius 2
  Arc q{{0, 0}, 2.0, 0.0, kPi / 2.0, true};
  CHECK(primitive_length(q) == doctest::Approx(kPi).epsilon(1e-14));
}

TEST_CASE("signed_area closed forms and orientation") {
  CHECK(signed_area(make_circle(1.0)) == doctest::Approx(kPi).epsilon(1e-13));
  ArcSpline cw;
  for (int k = 4; k >= 1; --k)
    cw.primitives.push_back(Arc{{0, 0}, 1.0, k * kPi / 2.0, (k - 1) * kPi / 2.0, false});
  CHECK(signed_area(cw) == doctest::Approx(-kPi).epsilon(1e-13));
  CHECK(signed_area(make_stadium(1.0, 1.0)) == doctest::Approx(kPi + 2.0).epsilon(1e-13));
}

TEST_CASE("area and energy agree with sampling oracles") {
  for (const ArcSpline& c : {make_circle(1.0), make_stadium(1.0, 1.0), make_drop(),
                             make_rounded_polygon({{0, 0}, {2, 0}, {2, 2}, {0, 2}}, 0.5)}) {
    const double A = signed_area(c);
    CHECK(std::abs(A - oracles::area(c)) <= 1e-8 * std::abs(A));
    const double E = elastic_energy(c);
    CHECK(std::abs(E - oracles::energy(c)) <= 1e-8 * E);
    const double L = length(c);
    CHECK(std::abs(L - oracles::length(c)) <= 1e-8 * L);
  }
}

TEST_CASE("elastic energy closed forms") {
  CHECK(elastic_energy(make_circle(1.0)) == doctest::Approx(kPi).epsilon(1e-13));
  CHECK(elastic_energy(make_stadium(1.0, 1.0)) == doctest::Approx(kPi).epsilon(1e-13));
  Arc q{{0, 0}, 2.0, 0.0, kPi / 2.0, true};
  CHECK(primitive_energy(q) == doctest::Approx(kPi / 8.0).epsilon(1e-14));
  // rounded square side 2, fillet 1/2: E = pi / fillet
  auto sq = make_rounded_polygon({{0, 0}, {2, 0}, {2, 2}, {0, 2}}, 0.5);
  CHECK(elastic_energy(sq) == doctest::Approx(kTwoPi).epsilon(1e-13));
  CHECK(signed_area(sq) == doctest::Approx(4.0 - (4.0 - kPi) * 0.25).epsilon(1e-13));
}

TEST_CASE("total curvature and the cusp rule") {
  ArcSpline circle = make_circle(1.0);
  CHECK(total_curvature(circle, SubArcRef::full(circle)) == doctest::Approx(kTwoPi).epsilon(1e-12));
  // ccw quarter arc sub-span
  SubArcRef quarter{{0, 0.0}, {0, 1.0}, false};
  CHECK(total_curvature(circle, quarter) == doctest::Approx(kPi / 2.0).epsilon(1e-12));

  ArcSpline drop = make_drop();
  // without the cusp: integral of k is pi
  CHECK(total_curvature(drop, SubArcRef::full(drop)) == doctest::Approx(kPi).epsilon(1e-12));
  // wrapping the cusp adds the jump
  SubArcRef wrapped{{0, 0.0}, {0, 0.0}, true};
  CHECK(total_curvature(drop, wrapped) == doctest::Approx(kTwoPi).epsilon(1e-12));
  CHECK(turning_number(drop) == doctest::Approx(1.0).epsilon(1e-12));
}

TEST_CASE("point, tangent, and inward normal") {
  ArcSpline c = make_circle(1.0);
  CHECK((point_at(c, 0.0) - Vec2(1, 0)).norm() < 1e-12);
  CHECK((tangent_at(c, 0.0) - Vec2(0, 1)).norm() < 1e-12);
  CHECK((normal_at(c, 0.0) - Vec2(-1, 0)).norm() < 1e-12);
  CHECK((point_at(c, kPi) - Vec2(-1, 0)).norm() < 1e-12);
  CHECK((tangent_at(c, kPi) - Vec2(0, -1)).norm() < 1e-12);
  CHECK((normal_at(c, kPi) - Vec2(1, 0)).norm() < 1e-12);

  // stadium: inward probe from a segment midpoint stays inside
  ArcSpline st = make_stadium(1.0, 1.0);
  const double s_mid = 0.5;  // middle of the bottom segment
  const Vec2 p = point_at(st, s_mid);
  const Vec2 n = normal_at(st, s_mid);
  bool on = false;
  CHECK(winding_number(st, p + 1e-3 * n, &on) == 1);
  CHECK(winding_number(st, p - 1e-3 * n, &on) == 0);
}

TEST_CASE("is_simple catches a pinched two-lobe curve") {
  CHECK(is_simple(make_circle(1.0)));
  SimplicityViolation v;
  CHECK(!is_simple(make_figure_eight(), &v));
  CHECK(is_simple(make_drop()));  // closure contact allowed for class C
}

TEST_CASE("min_self_distance") {
  ArcSpline c = make_circle(1.0);
  // proper quarter sub-arc: positive distance after endpoint exclusion
  SubArcRef quarter{{0, 0.0}, {0, 1.0}, false};
  const double d = min_self_distance(c, quarter);
  CHECK(d > 0.0);
  CHECK(d < 1e-6);  // tiny: the complement starts right next to the endpoints

  // a larger exclusion yields the sampling-oracle distance
  const double excl = 0.5;
  const double dx = min_self_distance(c, quarter, excl);
  ArcLengthTable table(c);
  auto piece = extract_piece(c, quarter);
  SubArcRef comp = make_sub_arc(c, table.to_s(quarter.end) + excl,
                                kTwoPi + table.to_s(quarter.start) - excl);
  auto rest = extract_piece(c, comp);
  std::vector<Vec2> pa, pb;
  for (const auto& p : piece)
    for (int k = 0; k <= 400; ++k) pa.push_back(primitive_point(p, k / 400.0));
  for (const auto& p : rest)
    for (int k = 0; k <= 400; ++k) pb.push_back(primitive_point(p, k / 400.0));
  CHECK(dx == doctest::Approx(oracles::min_distance(pa, pb)).epsilon(1e-4));

  // stadium: one semicircle against the rest with a generous exclusion
  ArcSpline st = make_stadium(1.0, 1.0);
  SubArcRef semi{{1, 0.0}, {1, 1.0}, false};
  const double ds = min_self_distance(st, semi, 0.5);
  CHECK(ds > 0.0);
}

TEST_CASE("convex hull: convex inputs unchanged") {
  for (const ArcSpline& c : {make_circle(1.0), make_stadium(1.0, 2.0)}) {
    ArcSpline h = convex_hull(c);
    CHECK(validate(h).valid());
    CHECK(signed_area(h) == doctest::Approx(signed_area(c)).epsilon(1e-10));
    CHECK(length(h) == doctest::Approx(length(c)).epsilon(1e-10));
  }
}

TEST_CASE("convex hull: nonconvex input vs point-sampling oracle") {
  ArcSpline bone = make_figure1_family(2);
  ArcSpline h = convex_hull(bone);
  CHECK(validate(h).valid());
  for (const auto& p : h.primitives) CHECK(primitive_curvature(p) >= 0.0);
  CHECK(turning_number(h) == doctest::Approx(1.0).epsilon(1e-9));
  CHECK(signed_area(h) > signed_area(bone));

  auto samples = sample_points(bone, 200);
  auto hull_pts = oracles::hull_of_points(samples);
  const double oracle_area = oracles::polygon_area_of(hull_pts);
  CHECK(signed_area(h) == doctest::Approx(oracle_area).epsilon(1e-5));
  // hull contains every sampled input point
  for (size_t i = 0; i < samples.size(); i += 7) {
    bool on = false;
    const int w = winding_number(h, samples[i], &on, 1e-9);
    CHECK((on || w == 1));
  }
}

TEST_CASE("scaling law and rigid invariance") {
  std::mt19937_64 rng(7);
  std::uniform_real_distribution<double> uni(0.3, 2.5);
  for (int trial = 0; trial < 5; ++trial) {
    ArcSpline c = make_stadium(uni(rng), uni(rng));
    const double A = signed_area(c), E = elastic_energy(c), L = length(c);
    const double lambda = uni(rng);
    ArcSpline cs = scaled(c, lambda);
    CHECK(length(cs) == doctest::Approx(lambda * L).epsilon(1e-12));
    CHECK(signed_area(cs) == doctest::Approx(lambda * lambda * A).epsilon(1e-12));
    CHECK(elastic_energy(cs) == doctest::Approx(E / lambda).epsilon(1e-12));
    CHECK(signed_area(cs) * elastic_energy(cs) * elastic_energy(cs) ==
          doctest::Approx(A * E * E).epsilon(1e-10));

    RigidMotion m{uni(rng), Vec2(uni(rng), uni(rng))};
    ArcSpline cm = transformed(c, m);
    CHECK(length(cm) == doctest::Approx(L).epsilon(1e-10));
    CHECK(signed_area(cm) == doctest::Approx(A).epsilon(1e-10));
    CHECK(elastic_energy(cm) == doctest::Approx(E).epsilon(1e-10));
    CHECK(turning_number(cm) == doctest::Approx(1.0).epsilon(1e-12));
  }
}

TEST_CASE("Gauss-Bonnet at exact sweep arithmetic") {
  CHECK(total_signed_sweep(make_circle(2.0)) == doctest::Approx(kTwoPi).epsilon(1e-12));
  CHECK(total_signed_sweep(make_stadium(1.0, 3.0)) == doctest::Approx(kTwoPi).epsilon(1e-12));
  ArcSpline drop = make_drop();
  CHECK(total_signed_sweep(drop) + kPi == doctest::Approx(kTwoPi).epsilon(1e-12));
}
