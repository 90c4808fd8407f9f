#pragma once

#include <vector>

#include "elastica/primitive.hpp"

namespace elastica {

// One intersection of two primitives, with local parameters on each.
struct PrimitiveHit {
  Vec2 point = Vec2::Zero();
  double ta = 0.0;  // parameter on the first primitive
  double tb = 0.0;  // parameter on the second
  bool tangential = false;
  bool overlap = false;  // coincident sub-ranges (same line / same circle)
};

// Closed-form intersections between two primitives. Tolerance is used for
// endpoint snapping and tangency classification. Overlapping collinear or
// cocircular ranges report a single hit per overlap interval endpoint with
// overlap = true.
std::vector<PrimitiveHit> intersect_primitives(const Primitive& a, const Primitive& b,
                                               double tol = kPosTol);

// Closest approach between two primitives (0 when they intersect).
struct ClosestApproach {
  double distance = 0.0;
  Vec2 on_a = Vec2::Zero();
  Vec2 on_b = Vec2::Zero();
  double ta = 0.0;
  double tb = 0.0;
};

ClosestApproach primitive_distance(const Primitive& a, const Primitive& b);

// Point-to-primitive distance with the closest parameter.
double point_primitive_distance(const Vec2& q, const Primitive& p, double* t_out = nullptr);

// Intersections of an infinite line (through p0 with direction d, |d| = 1)
// with a primitive; returns local parameters on the primitive and the signed
// line coordinate of each hit.
struct LineHit {
  double t = 0.0;       // parameter on the primitive
  double along = 0.0;   // coordinate along the line, relative to p0
  Vec2 point = Vec2::Zero();
  bool tangential = false;
};
std::vector<LineHit> intersect_line_primitive(const Vec2& p0, const Vec2& d, const Primitive& p,
                                              double tol = kPosTol);

}  // namespace elastica
