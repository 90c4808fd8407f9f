#pragma once

#include <stdexcept>
#include <variant>

#include "elastica/geom.hpp"

namespace elastica {

// Straight piece, traversed from `from` to `to`.
struct Segment {
  Vec2 from;
  Vec2 to;
};

// Circular piece. Traversal runs from start_angle to end_angle in the stated
// orientation; the angular sweep is always in (0, 2*pi). Signed curvature is
// +1/radius when ccw, -1/radius when cw.
struct Arc {
  Vec2 center;
  double radius = 1.0;
  double start_angle = 0.0;
  double end_angle = 0.0;
  bool ccw = true;
};

using Primitive = std::variant<Segment, Arc>;

// ---- Arc helpers ------------------------------------------------------

// Unsigned angular sweep in (0, 2*pi).
inline double arc_sweep(const Arc& a) {
  double sw = a.ccw ? wrap_positive(a.end_angle - a.start_angle)
                    : wrap_positive(a.start_angle - a.end_angle);
  if (sw == 0.0) sw = kTwoPi;  // exact full turn is forbidden upstream; keep finite here
  return sw;
}

// Tangent turn along the arc: +sweep on ccw, -sweep on cw.
inline double arc_signed_sweep(const Arc& a) { return a.ccw ? arc_sweep(a) : -arc_sweep(a); }

// Position angle at local parameter t in [0,1].
inline double arc_angle_at(const Arc& a, double t) {
  return a.start_angle + t * arc_signed_sweep(a);
}

inline Vec2 arc_point_at_angle(const Arc& a, double theta) {
  return a.center + a.radius * unit_from_angle(theta);
}

// Local parameter of a position angle, or a value outside [0,1] if the angle
// is not on the arc. The angle is reduced modulo 2*pi relative to the start.
inline double arc_param_of_angle(const Arc& a, double theta) {
  double rel = a.ccw ? wrap_positive(theta - a.start_angle) : wrap_positive(a.start_angle - theta);
  return rel / arc_sweep(a);
}

// ---- Uniform primitive interface --------------------------------------

inline Vec2 primitive_start(const Primitive& p) {
  if (const auto* s = std::get_if<Segment>(&p)) return s->from;
  const auto& a = std::get<Arc>(p);
  return arc_point_at_angle(a, a.start_angle);
}

inline Vec2 primitive_end(const Primitive& p) {
  if (const auto* s = std::get_if<Segment>(&p)) return s->to;
  const auto& a = std::get<Arc>(p);
  return arc_point_at_angle(a, a.start_angle + arc_signed_sweep(a));
}

inline double primitive_length(const Primitive& p) {
  if (const auto* s = std::get_if<Segment>(&p)) return (s->to - s->from).norm();
  const auto& a = std::get<Arc>(p);
  return a.radius * arc_sweep(a);
}

inline Vec2 primitive_point(const Primitive& p, double t) {
  if (const auto* s = std::get_if<Segment>(&p)) return s->from + t * (s->to - s->from);
  const auto& a = std::get<Arc>(p);
  return arc_point_at_angle(a, arc_angle_at(a, t));
}

// Unit tangent in traversal direction.
inline Vec2 primitive_tangent(const Primitive& p, double t) {
  if (const auto* s = std::get_if<Segment>(&p)) return (s->to - s->from).normalized();
  const auto& a = std::get<Arc>(p);
  Vec2 radial = unit_from_angle(arc_angle_at(a, t));
  return a.ccw ? perp(radial) : Vec2(-perp(radial));
}

// Signed curvature along the primitive (constant).
inline double primitive_curvature(const Primitive& p) {
  if (std::holds_alternative<Segment>(p)) return 0.0;
  const auto& a = std::get<Arc>(p);
  return a.ccw ? 1.0 / a.radius : -1.0 / a.radius;
}

// Tangent turn contributed by the whole primitive.
inline double primitive_signed_sweep(const Primitive& p) {
  if (std::holds_alternative<Segment>(p)) return 0.0;
  return arc_signed_sweep(std::get<Arc>(p));
}

// Gauss-Green term: integral of (x dy - y dx) / 2 along the primitive.
inline double primitive_area_term(const Primitive& p) {
  if (const auto* s = std::get_if<Segment>(&p)) return 0.5 * cross2(s->from, s->to);
  const auto& a = std::get<Arc>(p);
  const Vec2 p0 = primitive_start(p);
  const Vec2 p1 = primitive_end(p);
  const double dtheta = arc_signed_sweep(a);
  return 0.5 * (a.radius * a.radius * dtheta + a.center.x() * (p1.y() - p0.y()) -
                a.center.y() * (p1.x() - p0.x()));
}

// Elastic energy contribution: (1/2) k^2 * length.
inline double primitive_energy(const Primitive& p) {
  if (std::holds_alternative<Segment>(p)) return 0.0;
  const auto& a = std::get<Arc>(p);
  return arc_sweep(a) / (2.0 * a.radius);
}

// Sub-piece between local parameters 0 <= t0 < t1 <= 1.
inline Primitive primitive_slice(const Primitive& p, double t0, double t1) {
  if (t0 < 0.0 || t1 > 1.0 || !(t0 < t1)) throw std::invalid_argument("primitive_slice: bad parameter range");
  if (const auto* s = std::get_if<Segment>(&p)) {
    Vec2 d = s->to - s->from;
    return Segment{s->from + t0 * d, s->from + t1 * d};
  }
  const auto& a = std::get<Arc>(p);
  return Arc{a.center, a.radius, arc_angle_at(a, t0), arc_angle_at(a, t1), a.ccw};
}

inline Primitive primitive_translate(const Primitive& p, const Vec2& v) {
  if (const auto* s = std::get_if<Segment>(&p)) return Segment{s->from + v, s->to + v};
  Arc a = std::get<Arc>(p);
  a.center += v;
  return a;
}

inline Primitive primitive_transform(const Primitive& p, const RigidMotion& m) {
  if (const auto* s = std::get_if<Segment>(&p)) return Segment{m(s->from), m(s->to)};
  Arc a = std::get<Arc>(p);
  a.center = m(a.center);
  a.start_angle += m.theta;
  a.end_angle += m.theta;
  return a;
}

inline Primitive primitive_scale(const Primitive& p, double lambda) {
  if (const auto* s = std::get_if<Segment>(&p)) return Segment{lambda * s->from, lambda * s->to};
  Arc a = std::get<Arc>(p);
  a.center *= lambda;
  a.radius *= lambda;
  return a;
}

// Point reflection through c (rotation by pi). Orientation of traversal is kept.
inline Primitive primitive_point_reflect(const Primitive& p, const Vec2& c) {
  if (const auto* s = std::get_if<Segment>(&p)) return Segment{2.0 * c - s->from, 2.0 * c - s->to};
  Arc a = std::get<Arc>(p);
  a.center = 2.0 * c - a.center;
  a.start_angle += kPi;
  a.end_angle += kPi;
  return a;
}

}  // namespace elastica
