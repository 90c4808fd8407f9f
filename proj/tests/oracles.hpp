#pragma once

// Independent numerical oracles for the closed-form geometry. These work from
// sampled points only, never from the primitive parameters they check.

#include <algorithm>
#include <cmath>
#include <vector>

#include "elastica/arc_spline.hpp"

namespace elastica::oracles {

// Polygonal shoelace on per-primitive samples (joints included).
inline double polygon_area(const ArcSpline& c, int per_prim) {
  double acc = 0.0;
  Vec2 prev = primitive_point(c.primitives.back(), 1.0);
  for (const auto& p : c.primitives) {
    for (int k = 0; k <= per_prim; ++k) {
      const Vec2 q = primitive_point(p, static_cast<double>(k) / per_prim);
      acc += cross2(prev, q);
      prev = q;
    }
  }
  return 0.5 * acc;
}

// Richardson-extrapolated shoelace: O(n^-4) for piecewise-C^2 boundaries.
inline double area(const ArcSpline& c, int per_prim = 2500) {
  const double a1 = polygon_area(c, per_prim);
  const double a2 = polygon_area(c, 2 * per_prim);
  return (4.0 * a2 - a1) / 3.0;
}

inline double polyline_length(const ArcSpline& c, int per_prim) {
  double acc = 0.0;
  for (const auto& p : c.primitives) {
    Vec2 prev = primitive_point(p, 0.0);
    for (int k = 1; k <= per_prim; ++k) {
      const Vec2 q = primitive_point(p, static_cast<double>(k) / per_prim);
      acc += (q - prev).norm();
      prev = q;
    }
  }
  return acc;
}

inline double length(const ArcSpline& c, int per_prim = 2500) {
  const double l1 = polyline_length(c, per_prim);
  const double l2 = polyline_length(c, 2 * per_prim);
  return (4.0 * l2 - l1) / 3.0;
}

// Quadrature of k^2/2 from sampled points: per-primitive discrete curvature
// (turning angle over mean chord) times the measured polyline length.
inline double energy_once(const ArcSpline& c, int per_prim) {
  double acc = 0.0;
  for (const auto& p : c.primitives) {
    std::vector<Vec2> pts(per_prim + 1);
    for (int k = 0; k <= per_prim; ++k)
      pts[k] = primitive_point(p, static_cast<double>(k) / per_prim);
    double len = 0.0;
    for (int k = 0; k < per_prim; ++k) len += (pts[k + 1] - pts[k]).norm();
    double ksum = 0.0;
    int kcnt = 0;
    for (int k = 1; k < per_prim; ++k) {
      const Vec2 e0 = pts[k] - pts[k - 1];
      const Vec2 e1 = pts[k + 1] - pts[k];
      const double h = 0.5 * (e0.norm() + e1.norm());
      if (h <= 0.0) continue;
      ksum += wrap_signed(angle_of(e1) - angle_of(e0)) / h;
      ++kcnt;
    }
    const double kbar = kcnt > 0 ? ksum / kcnt : 0.0;
    acc += 0.5 * kbar * kbar * len;
  }
  return acc;
}

inline double energy(const ArcSpline& c, int per_prim = 2500) {
  const double e1 = energy_once(c, per_prim);
  const double e2 = energy_once(c, 2 * per_prim);
  return (4.0 * e2 - e1) / 3.0;
}

// Brute-force minimum distance between two sampled point sets.
inline double min_distance(const std::vector<Vec2>& a, const std::vector<Vec2>& b) {
  double best = std::numeric_limits<double>::infinity();
  for (const auto& p : a)
    for (const auto& q : b) best = std::min(best, (p - q).norm());
  return best;
}

// Andrew monotone chain hull of a point set (ccw, no duplicate endpoint).
inline std::vector<Vec2> hull_of_points(std::vector<Vec2> pts) {
  std::sort(pts.begin(), pts.end(), [](const Vec2& a, const Vec2& b) {
    return a.x() < b.x() || (a.x() == b.x() && a.y() < b.y());
  });
  pts.erase(std::unique(pts.begin(), pts.end(),
                        [](const Vec2& a, const Vec2& b) { return (a - b).norm() < 1e-14; }),
            pts.end());
  const int n = static_cast<int>(pts.size());
  if (n < 3) return pts;
  std::vector<Vec2> h(2 * n);
  int k = 0;
  for (int i = 0; i < n; ++i) {
    while (k >= 2 && cross2(h[k - 1] - h[k - 2], pts[i] - h[k - 2]) <= 0) --k;
    h[k++] = pts[i];
  }
  const int lower = k + 1;
  for (int i = n - 2; i >= 0; --i) {
    while (k >= lower && cross2(h[k - 1] - h[k - 2], pts[i] - h[k - 2]) <= 0) --k;
    h[k++] = pts[i];
  }
  h.resize(k - 1);
  return h;
}

inline double polygon_area_of(const std::vector<Vec2>& pts) {
  double acc = 0.0;
  const int n = static_cast<int>(pts.size());
  for (int i = 0; i < n; ++i) acc += cross2(pts[i], pts[(i + 1) % n]);
  return 0.5 * acc;
}

}  // namespace elastica::oracles
