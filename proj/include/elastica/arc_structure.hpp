#pragma once

#include <optional>
#include <utility>

#include "elastica/arc_spline.hpp"

namespace elastica {

enum class ArcSign { Convex, Concave };

// Inclusion-maximal sub-arc of one curvature sign; zero-curvature segments
// extend the run they sit in. Spans never include the cusp of a class C curve.
struct MaximalArc {
  ArcSign sign = ArcSign::Convex;
  SubArcRef span;
  double total_curvature = 0.0;
};

// Evidence that a convex sub-arc of total curvature pi holds a convex set:
// the open chord between its endpoints stays inside the closed region.
struct HeldArcCertificate {
  SubArcRef span;
  Vec2 chord_a = Vec2::Zero();
  Vec2 chord_b = Vec2::Zero();
  double total_curvature = kPi;
};

enum class TerminalClass { Kpi, Cpi, Neither };

struct ClassTag {
  TerminalClass tag = TerminalClass::Neither;
  std::vector<MaximalArc> witnesses;  // arcs violating the class conditions
};

// Alternating cover of the curve by maximal convex/concave arcs. For class C
// the partition breaks at the cusp. A curve of constant curvature sign is a
// single maximal arc covering everything.
std::vector<MaximalArc> decompose_maximal_arcs(const ArcSpline& c);

// Number of maximal disjoint concave arcs; 0 iff the region is convex.
int oscillation_number(const ArcSpline& c);

// Conditions (i)-(iii): convex span, total curvature pi (within tol), chord
// inside the closure of the region.
std::optional<HeldArcCertificate> holds_convex_set(const ArcSpline& c, const SubArcRef& sub,
                                                   double tol = 1e-9);

// First point after (or before) s where the running curvature integral from s
// reaches pi. Ties (flat runs) resolve to the minimal arc-length distance.
// Throws when the level is not reached before returning to s (class K) or
// before hitting the cusp (class C).
enum class WalkDirection { Forward, Backward };
double find_sharp_point(const ArcSpline& c, double s, WalkDirection dir);

// Nearest curve crossing of the open segment from gamma(s) toward target; the
// returned point makes a chord. Throws when no crossing exists.
Vec2 find_chord_dagger(const ArcSpline& c, double s, const Vec2& target);

// True iff no sub-arc of the maximal convex arc holds a convex set, scanning
// candidate start points (joints plus a grid of grid_per_arc points).
bool is_void(const ArcSpline& c, const MaximalArc& arc, int grid_per_arc = 64,
             HeldArcCertificate* found = nullptr);

// Nesting test: inner and outer are pi-sweep convex arcs flanking a common
// concave arc; inner is nested when it meets the chord of outer.
bool is_nested(const ArcSpline& c, const SubArcRef& inner, const SubArcRef& outer);

ClassTag classify(const ArcSpline& c, double band = 1e-9);

// Certificate searches ending the proof. Both re-verify their results via
// holds_convex_set before returning.
std::pair<HeldArcCertificate, HeldArcCertificate> find_two_disjoint_held_arcs(
    const ArcSpline& c, int grid_per_arc = 64);
HeldArcCertificate find_held_arc_cusp(const ArcSpline& c, int grid_per_arc = 64);

// Diagnostic scans for the two structural lemmas.
struct LemmaTotalReport {
  double min_total_curvature = 0.0;
  double s_begin = 0.0;
  double s_end = 0.0;
  bool holds = false;  // min > -pi + tol
};
LemmaTotalReport check_lemma_total(const ArcSpline& c, int grid_per_prim = 8, double tol = 1e-9);

struct LemmaRotationReport {
  int samples_checked = 0;
  int returns_checked = 0;
  std::vector<double> violations;  // parameters s where configuration (b) appeared
  bool holds = true;
};
LemmaRotationReport check_lemma_rotation(const ArcSpline& c, int grid_per_prim = 8);

// Helpers shared with the procedures module.
double sub_arc_length(const ArcSpline& c, const SubArcRef& sub);
bool span_contains(const ArcSpline& c, const SubArcRef& span, double s, double slack = 1e-12);

// Sub-arc from arc length s0 to s1_ext; s1_ext beyond the curve length marks a
// wrapped traversal.
SubArcRef make_sub_arc(const ArcSpline& c, double s0, double s1_ext);

// Span endpoints in extended arc length (end >= start, may exceed the total).
std::pair<double, double> span_interval(const ArcSpline& c, const SubArcRef& span);

}  // namespace elastica
