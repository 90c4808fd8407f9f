#pragma once

#include <cstdint>
#include <functional>

#include "elastica/arc_spline.hpp"

namespace elastica {

// ---- Canonical convex curves ------------------------------------------------

ArcSpline make_circle(double radius, const Vec2& center = Vec2::Zero());

// Two radius-r semicircles joined by straight sides of length d.
ArcSpline make_stadium(double r, double d);

// Convex polygon with corners replaced by tangent fillet arcs.
ArcSpline make_rounded_polygon(const std::vector<Vec2>& vertices, double fillet_radius);

// ---- Figure-1 family ----------------------------------------------------------

// Two square blobs joined by a long thin bar: twelve segments and twelve
// quarter-circle corners. The bar length grows linearly with n while its
// thickness is solved so the enclosed area stays pinned; the corner radii
// never change, so the elastic energy is constant along the family.
struct Figure1Params {
  double blob_side = 5.0;
  double corner_radius = 1.0;   // convex corners (eight)
  double fillet_radius = 1.0;   // concave bar-blob fillets (four)
  double d0 = 20.0;             // bar segment length at n = 1 is d0, at n it is d0*n
  double delta1 = 0.35;         // bar thickness at n = 1 (sets the default area)
};

// base_area <= 0 selects the family's natural area at n = 1.
ArcSpline make_figure1_family(int n, double base_area = -1.0, const Figure1Params& params = {});

// Largest n for which the thickness solution stays positive (feasibility).
int figure1_max_feasible_n(double base_area, const Figure1Params& params = {});

// ---- Nonconvex test shapes -----------------------------------------------------

// m-fold rotationally symmetric chain of alternating convex (sweep `bump`)
// and concave (sweep `dent`) arcs; bump - dent = 2*pi/m.
ArcSpline make_gear(int lobes, double bump_radius, double bump_sweep, double dent_radius);

// Oval with one concave bay (a dent); dent_sweep in (0, pi].
ArcSpline make_dented_oval(double body_radius, double dent_radius, double dent_sweep);

// Hook-shaped blob with a lobe tucked under its overhang: a gentle sweep, a
// tight hook tip, a small dent, and an inner lobe threading back through the
// mouth. The pi-arc flanking the dent on the lobe side crosses the chord of
// the hook tip's pi-arc, so the curve carries a genuine nested-arc instance
// while staying in K_pi.
struct RolledHookParams {
  double lobe_radius = 0.7;
  double lobe_sweep = 1.25 * kPi;
  double s_sweep = 0.9 * kPi;   // concave swing of the closure S
  double s_radius = 0.08;
  double mouth_run = 3.5;       // straight run through the mouth
};
ArcSpline make_rolled_hook(const RolledHookParams& params = {});

// Two rounded blobs joined by a waist that is pinched from above and below by
// semicircular bays: the concave runs have total curvature exactly -pi, so
// Procedure 2 applies. `asymmetry` shifts the bays off the vertical axis.
struct DumbbellParams {
  double lobe_radius = 3.0;
  double half_span = 6.0;     // lobe center offset from the axis
  double bay_radius = 1.0;
  double wall_depth = 0.8;    // straight bay wall length
  double fillet_radius = 0.7;
  double asymmetry = 0.0;     // horizontal shift of the bays (+x0 top, -x0 bottom)
};
ArcSpline make_bay_dumbbell(const DumbbellParams& params = {});

// Bay dumbbell variant whose bottom edge carries two headlands under the bay:
// the descending bay floor touches both tips simultaneously, producing a
// multi-contact pinch whose middle material is discarded by the split.
ArcSpline make_canyon_dumbbell();

// Dumbbell with two necks of different depths; the deeper neck pinches first
// and leaves a class C piece that still carries a procedure-2 site, so the
// reduction pinches again on a cusp curve.
ArcSpline make_two_neck_dumbbell();

// ---- Random curves and biarc fitting ----------------------------------------

// Random smooth closed curve: a low-order trigonometric radial perturbation of
// the unit circle, fitted by tangent-continuous biarcs. Deterministic per seed;
// resampled with damped amplitudes until simple.
ArcSpline make_random_simple(std::uint64_t seed, int complexity = 2, double fit_tol = 1e-6);

// Tangent-continuous biarc interpolation of a closed sample loop.
struct SampleTangent {
  Vec2 point = Vec2::Zero();
  Vec2 tangent = Vec2::Zero();  // unit
};
ArcSpline biarc_fit(const std::vector<SampleTangent>& samples, double tol = 1e-6);

// Biarc approximation of an axis-aligned ellipse (samples + analytic tangents).
ArcSpline make_biarc_ellipse(double a, double b, int samples = 64);

// Dense point sampling of a curve, joints included (oracle support and flows).
std::vector<Vec2> sample_points(const ArcSpline& c, int per_primitive);

// Closed polyline of an axis-aligned ellipse (uniform in parameter).
std::vector<Vec2> sample_ellipse(double a, double b, int n);

}  // namespace elastica
