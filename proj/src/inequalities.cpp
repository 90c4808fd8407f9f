#include "elastica/inequalities.hpp"

#include <algorithm>
#include <cmath>
#include <random>

#include "elastica/generators.hpp"

namespace elastica {

namespace {

InequalityReport make_report(const std::string& name, double lhs, double rhs, double tol) {
  InequalityReport r;
  r.name = name;
  r.lhs = lhs;
  r.rhs = rhs;
  r.slack = lhs - rhs;
  const double scale = std::max({std::abs(lhs), std::abs(rhs), 1.0});
  r.satisfied = lhs >= rhs - tol * scale;
  return r;
}

}  // namespace

bool is_convex_curve(const ArcSpline& c) {
  for (const auto& p : c.primitives)
    if (primitive_curvature(p) < 0.0) return false;
  return true;
}

InequalityReport check_main(const ArcSpline& c, double tol) {
  const double A = signed_area(c);
  const double E = elastic_energy(c);
  return make_report("main", A * E * E, kPi * kPi * kPi, tol);
}

InequalityReport check_gage(const ArcSpline& c, double tol) {
  const double A = signed_area(c);
  const double E = elastic_energy(c);
  const double L = length(c);
  InequalityReport r = make_report("gage", 2.0 * E, kPi * L / A, tol);
  if (!r.satisfied && !is_convex_curve(c)) {
    r.expected_violation = true;
    r.note = "nonconvex curve: Gage's inequality does not apply";
  }
  return r;
}

InequalityReport check_fixed_length(const ArcSpline& c, double tol) {
  return make_report("fixed_length", length(c) * elastic_energy(c), 2.0 * kPi * kPi, tol);
}

Deficits deficits(const ArcSpline& c, double tol) {
  Deficits d;
  const double A = signed_area(c);
  const double E = elastic_energy(c);
  const double L = length(c);
  const double iso = std::sqrt(4.0 * kPi * A);
  d.length_deficit = (L - iso) / iso;
  d.elastic_deficit = (L * E - 2.0 * kPi * kPi) / (2.0 * kPi * kPi);
  d.report = make_report("deficit", d.elastic_deficit, d.length_deficit, tol);
  return d;
}

// ---- Radii -------------------------------------------------------------------

namespace {

struct Disk {
  Vec2 center = Vec2::Zero();
  double r2 = 0.0;
};

bool in_disk(const Disk& d, const Vec2& p) {
  return (p - d.center).squaredNorm() <= d.r2 * (1.0 + 1e-12) + 1e-300;
}

Disk disk2(const Vec2& a, const Vec2& b) {
  Disk d;
  d.center = 0.5 * (a + b);
  d.r2 = (a - d.center).squaredNorm();
  return d;
}

Disk disk3(const Vec2& a, const Vec2& b, const Vec2& c) {
  const Vec2 ab = b - a, ac = c - a;
  const double den = 2.0 * cross2(ab, ac);
  if (std::abs(den) < 1e-300) return disk2(a, (b - a).squaredNorm() > (c - a).squaredNorm() ? b : c);
  const double ab2 = ab.squaredNorm(), ac2 = ac.squaredNorm();
  Disk d;
  d.center = a + Vec2(ac.y() * ab2 - ab.y() * ac2, ab.x() * ac2 - ac.x() * ab2) / den;
  d.r2 = (a - d.center).squaredNorm();
  return d;
}

// Welzl's minimum enclosing circle on a point set.
Disk welzl(std::vector<Vec2> pts) {
  std::mt19937_64 rng(1234567);
  std::shuffle(pts.begin(), pts.end(), rng);
  Disk d;
  d.center = pts.front();
  d.r2 = 0.0;
  for (size_t i = 1; i < pts.size(); ++i) {
    if (in_disk(d, pts[i])) continue;
    d = Disk{pts[i], 0.0};
    for (size_t j = 0; j < i; ++j) {
      if (in_disk(d, pts[j])) continue;
      d = disk2(pts[i], pts[j]);
      for (size_t k = 0; k < j; ++k) {
        if (in_disk(d, pts[k])) continue;
        d = disk3(pts[i], pts[j], pts[k]);
      }
    }
  }
  return d;
}

// farthest boundary point from x, exact per primitive
double max_boundary_distance(const ArcSpline& c, const Vec2& x) {
  double best = 0.0;
  for (const auto& p : c.primitives) {
    if (const auto* s = std::get_if<Segment>(&p)) {
      best = std::max({best, (s->from - x).norm(), (s->to - x).norm()});
    } else {
      const auto& a = std::get<Arc>(p);
      const Vec2 d = a.center - x;
      const double dist = d.norm();
      // candidate: far side of the circle if the angle lies on the arc
      const double theta = angle_of(d);
      const double rel = a.ccw ? wrap_positive(theta - a.start_angle)
                               : wrap_positive(a.start_angle - theta);
      if (rel <= arc_sweep(a)) best = std::max(best, dist + a.radius);
      best = std::max(best, (primitive_start(p) - x).norm());
      best = std::max(best, (primitive_end(p) - x).norm());
    }
  }
  return best;
}

}  // namespace

Radii compute_radii(const ArcSpline& c, double rel_tol) {
  Radii out;
  out.tolerance = rel_tol;

  // outer radius: Welzl on samples, then arc-aware support refinement
  auto pts = sample_points(c, 32);
  Disk mec = welzl(pts);
  for (int iter = 0; iter < 24; ++iter) {
    // add the exact farthest boundary points from the current center and re-run
    double worst = max_boundary_distance(c, mec.center);
    if (worst * worst <= mec.r2 * (1.0 + rel_tol)) break;
    for (const auto& p : c.primitives) {
      if (const auto* a = std::get_if<Arc>(&p)) {
        const Vec2 d = a->center - mec.center;
        if (d.norm() < 1e-15) continue;
        pts.push_back(a->center + a->radius * d.normalized());
      }
    }
    mec = welzl(pts);
  }
  out.outer_radius = std::max(std::sqrt(mec.r2), max_boundary_distance(c, mec.center) /
                                                     (1.0 + rel_tol));
  out.outer_radius = std::max(std::sqrt(mec.r2), out.outer_radius);

  // inradius: maximize distance-to-boundary over interior seeds + pattern search
  Vec2 lo = Vec2::Constant(std::numeric_limits<double>::infinity());
  Vec2 hi = -lo;
  for (const auto& q : pts) {
    lo = lo.cwiseMin(q);
    hi = hi.cwiseMax(q);
  }
  auto depth = [&](const Vec2& x) {
    bool on = false;
    if (winding_number(c, x, &on, c.pos_tol) == 0 || on) return -distance_to_curve(c, x);
    return distance_to_curve(c, x);
  };
  Vec2 best_x = 0.5 * (lo + hi);
  double best_d = depth(best_x);
  const int grid = 24;
  for (int i = 1; i < grid; ++i) {
    for (int j = 1; j < grid; ++j) {
      Vec2 x(lo.x() + (hi.x() - lo.x()) * i / grid, lo.y() + (hi.y() - lo.y()) * j / grid);
      const double d = depth(x);
      if (d > best_d) {
        best_d = d;
        best_x = x;
      }
    }
  }
  double step = (hi - lo).norm() / grid;
  while (step > 0.25 * rel_tol * std::max(best_d, 1e-12)) {
    bool improved = false;
    for (const Vec2& dir : {Vec2(1, 0), Vec2(-1, 0), Vec2(0, 1), Vec2(0, -1), Vec2(1, 1),
                            Vec2(-1, 1), Vec2(1, -1), Vec2(-1, -1)}) {
      const Vec2 x = best_x + step * dir;
      const double d = depth(x);
      if (d > best_d) {
        best_d = d;
        best_x = x;
        improved = true;
      }
    }
    if (!improved) step *= 0.5;
  }
  out.inradius = std::max(best_d, 0.0);
  return out;
}

InequalityReport check_enomoto(const ArcSpline& c, const Radii& radii, double tol) {
  const double L = length(c);
  const double E = elastic_energy(c);
  const double gap = radii.outer_radius - radii.inradius;
  InequalityReport r = make_report("enomoto", L * E - 2.0 * kPi * kPi,
                                   kPi * kPi * gap * gap / (L * L), tol);
  r.note = "radii tolerance " + std::to_string(radii.tolerance);
  return r;
}

InequalityReport check_bonnesen_improved(const ArcSpline& c, const Radii& radii, double tol) {
  const double L = length(c);
  const double E = elastic_energy(c);
  const double gap = radii.outer_radius - radii.inradius;
  InequalityReport r = make_report("bonnesen_improved", L * E - 2.0 * kPi * kPi,
                                   kPi * kPi * kPi * kPi * gap * gap / (L * L), tol);
  r.note = "radii tolerance " + std::to_string(radii.tolerance);
  return r;
}

InequalityReport two_convex_bound(const ArcSpline& omega1, const ArcSpline& omega2, double e1,
                                  double e2, double tol) {
  const double area = signed_area(omega1) + signed_area(omega2);
  const double esum = e1 + e2;
  return make_report("two_convex", area * esum * esum, kPi * kPi * kPi, tol);
}

StationarityResidual euler_lagrange_residual(const std::vector<Vec2>& closed_points) {
  StationarityResidual out;
  const int n = static_cast<int>(closed_points.size());
  if (n < 8) return out;
  auto at = [&](int i) { return closed_points[((i % n) + n) % n]; };
  // discrete curvature: turning angle over average edge length
  std::vector<double> k(n), ds(n);
  for (int i = 0; i < n; ++i) {
    const Vec2 e0 = at(i) - at(i - 1);
    const Vec2 e1 = at(i + 1) - at(i);
    const double turn = wrap_signed(angle_of(e1) - angle_of(e0));
    const double h = 0.5 * (e0.norm() + e1.norm());
    k[i] = h > 0.0 ? turn / h : 0.0;
    ds[i] = h;
  }
  // k'' by centered differences in arc length, residual k'' + k^3/2
  double sum = 0.0, sum2 = 0.0;
  for (int i = 0; i < n; ++i) {
    const double hm = 0.5 * (ds[i] + ds[(i - 1 + n) % n]);
    const double hp = 0.5 * (ds[i] + ds[(i + 1) % n]);
    const double kpp =
        2.0 * (k[(i + 1) % n] * hm - k[i] * (hm + hp) + k[(i - 1 + n) % n] * hp) /
        (hm * hp * (hm + hp));
    const double res = kpp + 0.5 * k[i] * k[i] * k[i];
    sum += res;
    sum2 += res * res;
  }
  out.samples = n;
  out.mean = sum / n;
  out.variance = sum2 / n - out.mean * out.mean;
  return out;
}

std::vector<InequalityReport> run_all_checks(const ArcSpline& c, const Radii& radii) {
  std::vector<InequalityReport> out;
  out.push_back(check_main(c));
  out.push_back(check_gage(c));
  out.push_back(check_fixed_length(c));
  out.push_back(deficits(c).report);
  out.push_back(check_enomoto(c, radii));
  out.push_back(check_bonnesen_improved(c, radii));
  return out;
}

}  // namespace elastica
