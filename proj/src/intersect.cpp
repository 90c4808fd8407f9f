#include "elastica/intersect.hpp"

#include <algorithm>
#include <cmath>

namespace elastica {

namespace {

// Clamp a parameter that is within tol-of-range onto [0,1]; returns false if
// it is genuinely outside.
bool snap_param(double& t, double span_len, double tol) {
  const double slack = span_len > 0.0 ? tol / span_len : 0.0;
  if (t < -slack || t > 1.0 + slack) return false;
  t = std::clamp(t, 0.0, 1.0);
  return true;
}

// Is the position angle theta on the arc? If so set the local parameter.
bool angle_on_arc(const Arc& a, double theta, double tol, double& t_out) {
  const double sweep = arc_sweep(a);
  double rel = a.ccw ? wrap_positive(theta - a.start_angle) : wrap_positive(a.start_angle - theta);
  // allow endpoint slack in arc length units
  const double ang_slack = a.radius > 0.0 ? tol / a.radius : 0.0;
  if (rel > sweep) {
    // wrap-around slack: an angle just "before" the start shows up near 2*pi
    if (rel >= kTwoPi - ang_slack) rel = 0.0;
    else if (rel <= sweep + ang_slack) rel = sweep;
    else return false;
  }
  t_out = rel / sweep;
  return true;
}

std::vector<PrimitiveHit> seg_seg(const Segment& a, const Segment& b, double tol) {
  std::vector<PrimitiveHit> hits;
  const Vec2 r = a.to - a.from;
  const Vec2 s = b.to - b.from;
  const double denom = cross2(r, s);
  const Vec2 qp = b.from - a.from;
  const double len_r = r.norm(), len_s = s.norm();
  if (std::abs(denom) <= tol * std::max(len_r * len_s, 1e-300)) {
    // parallel; check collinearity
    if (std::abs(cross2(qp, r)) > tol * std::max(len_r, 1.0)) return hits;
    // collinear: project b onto a
    const double rr = r.squaredNorm();
    double t0 = qp.dot(r) / rr;
    double t1 = (b.to - a.from).dot(r) / rr;
    double lo = std::min(t0, t1), hi = std::max(t0, t1);
    lo = std::max(lo, 0.0);
    hi = std::min(hi, 1.0);
    if (hi < lo - tol / std::max(len_r, 1e-300)) return hits;
    for (double ta : {lo, hi}) {
      PrimitiveHit h;
      h.ta = std::clamp(ta, 0.0, 1.0);
      h.point = a.from + h.ta * r;
      double tb = (h.point - b.from).dot(s) / s.squaredNorm();
      h.tb = std::clamp(tb, 0.0, 1.0);
      h.tangential = true;
      h.overlap = hi > lo + tol / std::max(len_r, 1e-300);
      hits.push_back(h);
      if (hi - lo <= tol / std::max(len_r, 1e-300)) break;  // single touching point
    }
    return hits;
  }
  double ta = cross2(qp, s) / denom;
  double tb = cross2(qp, r) / denom;
  if (!snap_param(ta, len_r, tol) || !snap_param(tb, len_s, tol)) return hits;
  PrimitiveHit h;
  h.ta = ta;
  h.tb = tb;
  h.point = a.from + ta * r;
  hits.push_back(h);
  return hits;
}

std::vector<PrimitiveHit> seg_arc(const Segment& s, const Arc& a, double tol, bool swapped) {
  std::vector<PrimitiveHit> hits;
  const Vec2 d = s.to - s.from;
  const double len = d.norm();
  if (len <= 0.0) return hits;
  const Vec2 u = d / len;
  const Vec2 m = s.from - a.center;
  // |m + x u| = R along the segment coordinate x in [0, len]
  const double b = m.dot(u);
  const double c = m.squaredNorm() - a.radius * a.radius;
  double disc = b * b - c;
  const double tang_band = 2.0 * a.radius * tol;  // disc scale at tangency
  std::vector<std::pair<double, bool>> roots;  // (x, tangential)
  if (disc > tang_band) {
    const double sq = std::sqrt(disc);
    roots.push_back({-b - sq, false});
    roots.push_back({-b + sq, false});
  } else if (disc > -tang_band) {
    roots.push_back({-b, true});
  }
  for (auto [x, tang] : roots) {
    double ts = x / len;
    if (!snap_param(ts, len, tol)) continue;
    const Vec2 p = s.from + ts * d;
    const double theta = angle_of(p - a.center);
    double ta;
    if (!angle_on_arc(a, theta, tol, ta)) continue;
    PrimitiveHit h;
    h.point = p;
    h.tangential = tang;
    if (swapped) {
      h.ta = ta;
      h.tb = ts;
    } else {
      h.ta = ts;
      h.tb = ta;
    }
    hits.push_back(h);
  }
  return hits;
}

std::vector<PrimitiveHit> arc_arc(const Arc& a, const Arc& b, double tol) {
  std::vector<PrimitiveHit> hits;
  const Vec2 d = b.center - a.center;
  const double dist = d.norm();
  const double ra = a.radius, rb = b.radius;
  if (dist <= tol && std::abs(ra - rb) <= tol) {
    // same circle: overlapping angular ranges
    const double sweep_a = arc_sweep(a);
    auto on_a = [&](double theta) {
      double rel = a.ccw ? wrap_positive(theta - a.start_angle) : wrap_positive(a.start_angle - theta);
      return rel <= sweep_a;
    };
    // collect candidate overlap endpoints: ends of b that lie on a and vice versa
    std::vector<double> thetas;
    for (double th : {b.start_angle, b.start_angle + arc_signed_sweep(b)})
      if (on_a(th)) thetas.push_back(th);
    const double sweep_b = arc_sweep(b);
    auto on_b = [&](double theta) {
      double rel = b.ccw ? wrap_positive(theta - b.start_angle) : wrap_positive(b.start_angle - theta);
      return rel <= sweep_b;
    };
    for (double th : {a.start_angle, a.start_angle + arc_signed_sweep(a)})
      if (on_b(th)) thetas.push_back(th);
    bool overlap = false;
    {
      // overlap is genuine if some midpoint of one lies strictly on the other
      for (double f : {0.25, 0.5, 0.75}) {
        double th = arc_angle_at(b, f);
        if (on_a(th)) overlap = true;
      }
    }
    for (double th : thetas) {
      double ta, tb;
      if (!angle_on_arc(a, th, tol, ta) || !angle_on_arc(b, th, tol, tb)) continue;
      PrimitiveHit h;
      h.point = arc_point_at_angle(a, th);
      h.ta = ta;
      h.tb = tb;
      h.tangential = true;
      h.overlap = overlap;
      hits.push_back(h);
    }
    return hits;
  }
  if (dist <= tol) return hits;  // concentric, different radii
  // circle-circle: x along center line, y perpendicular offset
  const double x = (dist * dist + ra * ra - rb * rb) / (2.0 * dist);
  double y2 = ra * ra - x * x;
  const double tang_band = 2.0 * std::max(ra, rb) * tol;
  std::vector<std::pair<Vec2, bool>> pts;
  const Vec2 u = d / dist;
  const Vec2 v = perp(u);
  if (y2 > tang_band) {
    const double y = std::sqrt(y2);
    pts.push_back({a.center + x * u + y * v, false});
    pts.push_back({a.center + x * u - y * v, false});
  } else if (y2 > -tang_band) {
    pts.push_back({a.center + x * u, true});
  }
  for (auto& [p, tang] : pts) {
    double ta, tb;
    if (!angle_on_arc(a, angle_of(p - a.center), tol, ta)) continue;
    if (!angle_on_arc(b, angle_of(p - b.center), tol, tb)) continue;
    PrimitiveHit h;
    h.point = p;
    h.ta = ta;
    h.tb = tb;
    h.tangential = tang;
    hits.push_back(h);
  }
  return hits;
}

}  // namespace

std::vector<PrimitiveHit> intersect_primitives(const Primitive& a, const Primitive& b, double tol) {
  if (const auto* sa = std::get_if<Segment>(&a)) {
    if (const auto* sb = std::get_if<Segment>(&b)) return seg_seg(*sa, *sb, tol);
    return seg_arc(*sa, std::get<Arc>(b), tol, /*swapped=*/false);
  }
  const Arc& aa = std::get<Arc>(a);
  if (const auto* sb = std::get_if<Segment>(&b)) {
    return seg_arc(*sb, aa, tol, /*swapped=*/true);
  }
  return arc_arc(aa, std::get<Arc>(b), tol);
}

double point_primitive_distance(const Vec2& q, const Primitive& p, double* t_out) {
  if (const auto* s = std::get_if<Segment>(&p)) {
    const Vec2 d = s->to - s->from;
    double t = d.squaredNorm() > 0.0 ? (q - s->from).dot(d) / d.squaredNorm() : 0.0;
    t = std::clamp(t, 0.0, 1.0);
    if (t_out) *t_out = t;
    return (q - (s->from + t * d)).norm();
  }
  const Arc& a = std::get<Arc>(p);
  const Vec2 m = q - a.center;
  const double r = m.norm();
  if (r > 0.0) {
    const double theta = angle_of(m);
    double t;
    if (angle_on_arc(a, theta, 0.0, t)) {
      if (t_out) *t_out = t;
      return std::abs(r - a.radius);
    }
  }
  // closest endpoint
  const Vec2 p0 = primitive_start(p);
  const Vec2 p1 = primitive_end(p);
  const double d0 = (q - p0).norm();
  const double d1 = (q - p1).norm();
  if (t_out) *t_out = d0 <= d1 ? 0.0 : 1.0;
  return std::min(d0, d1);
}

namespace {

// Candidate-based closest approach: endpoints against the other primitive
// plus interior critical points.
void consider(ClosestApproach& best, const Vec2& pa, double ta, const Vec2& pb, double tb) {
  const double d = (pa - pb).norm();
  if (d < best.distance) {
    best.distance = d;
    best.on_a = pa;
    best.on_b = pb;
    best.ta = ta;
    best.tb = tb;
  }
}

}  // namespace

ClosestApproach primitive_distance(const Primitive& a, const Primitive& b) {
  ClosestApproach best;
  best.distance = std::numeric_limits<double>::infinity();

  auto hits = intersect_primitives(a, b);
  if (!hits.empty()) {
    best.distance = 0.0;
    best.on_a = best.on_b = hits.front().point;
    best.ta = hits.front().ta;
    best.tb = hits.front().tb;
    return best;
  }

  // endpoints of a vs b and vice versa
  for (double ta : {0.0, 1.0}) {
    const Vec2 pa = primitive_point(a, ta);
    double tb;
    point_primitive_distance(pa, b, &tb);
    consider(best, pa, ta, primitive_point(b, tb), tb);
  }
  for (double tb : {0.0, 1.0}) {
    const Vec2 pb = primitive_point(b, tb);
    double ta;
    point_primitive_distance(pb, a, &ta);
    consider(best, primitive_point(a, ta), ta, pb, tb);
  }

  // interior-interior critical points
  const auto* sa = std::get_if<Segment>(&a);
  const auto* sb = std::get_if<Segment>(&b);
  if (sa && sb) {
    // disjoint segments: minimum is at an endpoint, already covered
  } else if (sa || sb) {
    const Segment& s = sa ? *sa : *sb;
    const Arc& arc = sa ? std::get<Arc>(b) : std::get<Arc>(a);
    // foot of the arc center on the segment line
    const Vec2 d = s.to - s.from;
    const double len2 = d.squaredNorm();
    if (len2 > 0.0) {
      double ts = std::clamp((arc.center - s.from).dot(d) / len2, 0.0, 1.0);
      const Vec2 foot = s.from + ts * d;
      double t_arc;
      point_primitive_distance(foot, Primitive(arc), &t_arc);
      const Vec2 pa = arc_point_at_angle(arc, arc_angle_at(arc, t_arc));
      if (sa) consider(best, foot, ts, pa, t_arc);
      else consider(best, pa, t_arc, foot, ts);
    }
  } else {
    const Arc& aa = std::get<Arc>(a);
    const Arc& ab = std::get<Arc>(b);
    const Vec2 d = ab.center - aa.center;
    const double dist = d.norm();
    if (dist > 0.0) {
      // candidates along the center line, both sides of each circle
      for (double sa_ : {1.0, -1.0}) {
        const Vec2 pa_c = aa.center + sa_ * aa.radius * (d / dist);
        double ta;
        if (angle_on_arc(aa, angle_of(pa_c - aa.center), 0.0, ta)) {
          double tb;
          point_primitive_distance(pa_c, b, &tb);
          consider(best, pa_c, ta, primitive_point(b, tb), tb);
        }
      }
      for (double sb_ : {1.0, -1.0}) {
        const Vec2 pb_c = ab.center - sb_ * ab.radius * (d / dist);
        double tb;
        if (angle_on_arc(ab, angle_of(pb_c - ab.center), 0.0, tb)) {
          double ta;
          point_primitive_distance(pb_c, a, &ta);
          consider(best, primitive_point(a, ta), ta, pb_c, tb);
        }
      }
    }
  }
  return best;
}

std::vector<LineHit> intersect_line_primitive(const Vec2& p0, const Vec2& d, const Primitive& p,
                                              double tol) {
  std::vector<LineHit> hits;
  const Vec2 n = perp(d);
  if (const auto* s = std::get_if<Segment>(&p)) {
    const double h0 = n.dot(s->from - p0);
    const double h1 = n.dot(s->to - p0);
    if (std::abs(h0) <= tol && std::abs(h1) <= tol) {
      // collinear: report both endpoints as tangential hits
      for (double t : {0.0, 1.0}) {
        LineHit h;
        h.t = t;
        h.point = t == 0.0 ? s->from : s->to;
        h.along = d.dot(h.point - p0);
        h.tangential = true;
        hits.push_back(h);
      }
      return hits;
    }
    if ((h0 > tol && h1 > tol) || (h0 < -tol && h1 < -tol)) return hits;
    const double denom = h0 - h1;
    if (denom == 0.0) return hits;
    double t = h0 / denom;
    t = std::clamp(t, 0.0, 1.0);
    LineHit h;
    h.t = t;
    h.point = s->from + t * (s->to - s->from);
    h.along = d.dot(h.point - p0);
    hits.push_back(h);
    return hits;
  }
  const Arc& a = std::get<Arc>(p);
  const double dist = n.dot(a.center - p0);  // signed distance of center from line
  const double band = 2.0 * a.radius * tol;
  double y2 = a.radius * a.radius - dist * dist;
  std::vector<std::pair<Vec2, bool>> pts;
  const Vec2 foot = a.center - dist * n;
  if (y2 > band) {
    const double x = std::sqrt(y2);
    pts.push_back({foot + x * d, false});
    pts.push_back({foot - x * d, false});
  } else if (y2 > -band) {
    pts.push_back({foot, true});
  }
  for (auto& [pt, tang] : pts) {
    double ta;
    if (!angle_on_arc(a, angle_of(pt - a.center), tol, ta)) continue;
    LineHit h;
    h.t = ta;
    h.point = pt;
    h.along = d.dot(pt - p0);
    h.tangential = tang;
    hits.push_back(h);
  }
  return hits;
}

}  // namespace elastica
