#include "elastica/convex_hull.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace elastica {

namespace {

// Support features: ccw arcs (interior support over an angular window) and
// joint points (support at isolated angles, and at corners if any).
struct ArcFeature {
  Vec2 center;
  double radius;
  double a0, sweep;  // outward-normal window [a0, a0 + sweep], ccw
};

bool arc_covers(const ArcFeature& f, double theta) {
  return wrap_positive(theta - f.a0) <= f.sweep;
}

}  // namespace

ArcSpline convex_hull(const ArcSpline& c) {
  if (!(signed_area(c) > 0.0))
    throw std::invalid_argument("convex_hull: degenerate or negatively oriented input");

  std::vector<ArcFeature> arcs;
  std::vector<Vec2> points;
  for (const auto& p : c.primitives) {
    points.push_back(primitive_start(p));
    if (const auto* a = std::get_if<Arc>(&p)) {
      if (a->ccw) {
        // outward normal at position angle theta equals theta itself
        arcs.push_back(ArcFeature{a->center, a->radius, a->start_angle, arc_sweep(*a)});
      }
    }
  }

  // support value at direction theta; feature index: arcs then points
  auto support = [&](double theta, int* which) {
    const Vec2 u = unit_from_angle(theta);
    double best = -std::numeric_limits<double>::infinity();
    int bi = -1;
    for (size_t i = 0; i < arcs.size(); ++i) {
      if (!arc_covers(arcs[i], theta)) continue;
      const double v = arcs[i].center.dot(u) + arcs[i].radius;
      if (v > best + 1e-14) {
        best = v;
        bi = static_cast<int>(i);
      }
    }
    for (size_t j = 0; j < points.size(); ++j) {
      const double v = points[j].dot(u);
      if (v > best + 1e-12) {  // prefer arcs on near-ties (C1 input)
        best = v;
        bi = static_cast<int>(arcs.size() + j);
      }
    }
    if (which) *which = bi;
    return best;
  };

  // critical angles: feature window ends plus pairwise support ties
  std::vector<double> crit;
  for (const auto& f : arcs) {
    crit.push_back(wrap_positive(f.a0));
    crit.push_back(wrap_positive(f.a0 + f.sweep));
  }
  for (size_t i = 0; i < arcs.size(); ++i) {
    for (size_t j = i + 1; j < arcs.size(); ++j) {
      const Vec2 d = arcs[i].center - arcs[j].center;
      const double dr = arcs[j].radius - arcs[i].radius;
      const double dist = d.norm();
      if (dist < 1e-15) continue;
      if (std::abs(dr) > dist) continue;
      const double base = angle_of(d);
      const double off = std::acos(std::clamp(dr / dist, -1.0, 1.0));
      crit.push_back(wrap_positive(base + off));
      crit.push_back(wrap_positive(base - off));
    }
    for (const auto& q : points) {
      const Vec2 d = q - arcs[i].center;
      const double dist = d.norm();
      if (dist <= arcs[i].radius) continue;
      const double base = angle_of(-d);
      const double off = std::acos(std::clamp(arcs[i].radius / dist, -1.0, 1.0));
      crit.push_back(wrap_positive(base + off));
      crit.push_back(wrap_positive(base - off));
    }
  }
  for (size_t i = 0; i < points.size(); ++i) {
    for (size_t j = i + 1; j < points.size(); ++j) {
      const Vec2 d = points[i] - points[j];
      if (d.norm() < 1e-15) continue;
      crit.push_back(wrap_positive(angle_of(d) + kPi / 2.0));
      crit.push_back(wrap_positive(angle_of(d) - kPi / 2.0));
    }
  }
  std::sort(crit.begin(), crit.end());
  crit.erase(std::unique(crit.begin(), crit.end(),
                         [](double a, double b) { return std::abs(a - b) < 1e-12; }),
             crit.end());
  if (crit.empty()) crit.push_back(0.0);

  // winner per interval, merged over consecutive intervals
  struct Piece {
    int feature;
    double t0, t1;  // direction window
  };
  std::vector<Piece> pieces;
  const size_t m = crit.size();
  for (size_t i = 0; i < m; ++i) {
    const double t0 = crit[i];
    const double t1 = i + 1 < m ? crit[i + 1] : crit[0] + kTwoPi;
    if (t1 - t0 < 1e-13) continue;
    int who;
    support(0.5 * (t0 + t1), &who);
    if (who < 0) continue;
    if (!pieces.empty() && pieces.back().feature == who) {
      pieces.back().t1 = t1;
    } else {
      pieces.push_back({who, t0, t1});
    }
  }
  if (pieces.empty()) throw std::runtime_error("convex_hull: no support features");
  if (pieces.size() > 1 && pieces.front().feature == pieces.back().feature) {
    pieces.front().t0 = pieces.back().t0 - kTwoPi;
    pieces.pop_back();
  }

  // assemble: arc pieces over their direction windows, bridge segments between
  auto support_point = [&](int feature, double theta) {
    if (feature < static_cast<int>(arcs.size()))
      return Vec2(arcs[feature].center + arcs[feature].radius * unit_from_angle(theta));
    return points[feature - arcs.size()];
  };

  ArcSpline hull;
  hull.pos_tol = std::max(c.pos_tol, 1e-9);
  hull.ang_tol = std::max(c.ang_tol, 1e-9);
  const size_t np = pieces.size();
  for (size_t i = 0; i < np; ++i) {
    const Piece& cur = pieces[i];
    const Piece& nxt = pieces[(i + 1) % np];
    if (cur.feature < static_cast<int>(arcs.size())) {
      const auto& f = arcs[cur.feature];
      if (cur.t1 - cur.t0 > 1e-12)
        hull.primitives.push_back(Arc{f.center, f.radius, cur.t0, cur.t1, true});
    }
    const Vec2 a = support_point(cur.feature, cur.t1);
    const Vec2 b = support_point(nxt.feature, cur.t1);
    if ((b - a).norm() > hull.pos_tol) hull.primitives.push_back(Segment{a, b});
  }
  if (hull.primitives.empty())
    throw std::runtime_error("convex_hull: empty hull boundary");
  return hull;
}

}  // namespace elastica
