#pragma once

#include <optional>
#include <string>
#include <vector>

#include "elastica/primitive.hpp"

namespace elastica {

enum class CurveClass { K, C };

// Closed, tangent-continuous chain of circular arcs and line segments.
// Class K curves are regular at the closure joint; class C curves have an
// external cusp there (outgoing tangent is minus the incoming tangent and
// points outside the enclosed region). The cusp is always the closure joint.
struct ArcSpline {
  std::vector<Primitive> primitives;
  CurveClass curve_class = CurveClass::K;
  double pos_tol = kPosTol;
  double ang_tol = kAngTol;

  int size() const { return static_cast<int>(primitives.size()); }
};

// Location on a curve: primitive index plus local parameter in [0,1].
struct CurvePoint {
  int prim = 0;
  double t = 0.0;
};

// Oriented sub-arc addressed by its two endpoints. When wraps_closure is set
// the traversal passes the closure joint (for class C curves: the cusp).
// start == end with wraps_closure covers the whole curve.
struct SubArcRef {
  CurvePoint start;
  CurvePoint end;
  bool wraps_closure = false;

  static SubArcRef full(const ArcSpline& c) {
    return SubArcRef{{0, 0.0}, {c.size() - 1, 1.0}, false};
  }
};

struct CurveMetrics {
  double length = 0.0;
  double area = 0.0;
  double energy = 0.0;
  int oscillation = 0;
  double turning_number = 0.0;
};

struct ValidationIssue {
  std::string what;
  int prim = -1;  // offending primitive, -1 when global
};

struct ValidationReport {
  std::vector<ValidationIssue> issues;
  bool valid() const { return issues.empty(); }
  std::string summary() const;
};

// ---- Arc-length bookkeeping -------------------------------------------

// Cumulative length table; cheap to rebuild, so operations that need arc
// length construct it on the fly.
class ArcLengthTable {
 public:
  explicit ArcLengthTable(const ArcSpline& c);

  double total() const { return total_; }
  double start_of(int prim) const { return cumulative_[prim]; }
  double length_of(int prim) const { return cumulative_[prim + 1] - cumulative_[prim]; }

  // Arc-length position of a curve point / curve point at an arc length.
  double to_s(const CurvePoint& p) const;
  CurvePoint to_point(double s) const;  // s is wrapped into [0, total)

 private:
  std::vector<double> cumulative_;
  double total_ = 0.0;
};

// ---- Basic functionals (closed form) -----------------------------------

double length(const ArcSpline& c);
double signed_area(const ArcSpline& c);
double elastic_energy(const ArcSpline& c);

// Integral of signed curvature over a sub-arc; adds +pi when the sub-arc of a
// class C curve wraps the cusp.
double total_curvature(const ArcSpline& c, const SubArcRef& sub);

// Tangent turn over the whole primitive chain (no cusp contribution).
double total_signed_sweep(const ArcSpline& c);

// Rotation index: (sweep + cusp jump) / 2*pi.
double turning_number(const ArcSpline& c);

// ---- Point queries ------------------------------------------------------

Vec2 point_at(const ArcSpline& c, double s);
Vec2 tangent_at(const ArcSpline& c, double s);
// Inward unit normal: tangent rotated by +pi/2 for a positively oriented curve.
Vec2 normal_at(const ArcSpline& c, double s);

// Tangent direction angle at a curve point (atan2 of tangent_at).
double tangent_angle_at(const ArcSpline& c, const CurvePoint& p);

// ---- Simplicity ----------------------------------------------------------

struct SimplicityViolation {
  int prim_a = -1;
  int prim_b = -1;
  Vec2 where = Vec2::Zero();
};

// True iff no two non-adjacent primitives meet and adjacent primitives meet
// only at their shared joint. For class C the closure contact is allowed.
bool is_simple(const ArcSpline& c, SimplicityViolation* violation = nullptr);

// Minimum distance between the sub-arc and the remainder of the curve, after
// trimming an arc-length neighborhood of the shared endpoints from the
// remainder. exclusion < 0 selects the default 10 * pos_tol.
double min_self_distance(const ArcSpline& c, const SubArcRef& sub, double exclusion = -1.0);

// ---- Validation and assembly --------------------------------------------

ValidationReport validate(const ArcSpline& c);

// Winding number of a point with respect to the curve (0 outside, 1 inside a
// positively oriented simple curve). Points within tol of the boundary are
// reported via on_boundary if provided.
int winding_number(const ArcSpline& c, const Vec2& q, bool* on_boundary = nullptr,
                   double tol = kPosTol);

// Distance from a point to the curve (closed form per primitive).
double distance_to_curve(const ArcSpline& c, const Vec2& q);

CurveMetrics metrics(const ArcSpline& c);

// Extract the primitive chain covering a sub-arc (split end primitives).
// Degenerate (< min_len) end slivers are dropped.
std::vector<Primitive> extract_piece(const ArcSpline& c, const SubArcRef& sub,
                                     double min_len = 1e-12);

// Assemble a closed curve from a primitive chain, dropping degenerate
// primitives (length below min_len). Does not validate.
ArcSpline assemble(std::vector<Primitive> prims, CurveClass cls, double pos_tol = kPosTol,
                   double ang_tol = kAngTol, double min_len = 1e-12);

ArcSpline translated(const ArcSpline& c, const Vec2& v);
ArcSpline transformed(const ArcSpline& c, const RigidMotion& m);
ArcSpline scaled(const ArcSpline& c, double lambda);

}  // namespace elastica
