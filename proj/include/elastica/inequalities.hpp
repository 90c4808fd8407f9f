#pragma once

#include <string>
#include <vector>

#include "elastica/arc_spline.hpp"

namespace elastica {

struct InequalityReport {
  std::string name;
  double lhs = 0.0;
  double rhs = 0.0;
  bool satisfied = false;
  double slack = 0.0;  // lhs - rhs
  bool expected_violation = false;  // Gage on nonconvex curves
  std::string note;
};

struct Radii {
  double inradius = 0.0;
  double outer_radius = 0.0;
  double tolerance = 0.0;  // relative accuracy of the estimates
};

// A E^2 >= pi^3.
InequalityReport check_main(const ArcSpline& c, double tol = 1e-9);

// Gage: 2E >= pi L / A. Violations on nonconvex curves are expected results.
InequalityReport check_gage(const ArcSpline& c, double tol = 1e-9);

// L E >= 2 pi^2.
InequalityReport check_fixed_length(const ArcSpline& c, double tol = 1e-9);

struct Deficits {
  double length_deficit = 0.0;   // (L - sqrt(4 pi A)) / sqrt(4 pi A)
  double elastic_deficit = 0.0;  // (L E - 2 pi^2) / (2 pi^2)
  InequalityReport report;       // elastic_deficit >= length_deficit
};
Deficits deficits(const ArcSpline& c, double tol = 1e-9);

// Smallest enclosing circle radius and largest inscribed disk radius of the
// region, to the stated relative tolerance.
Radii compute_radii(const ArcSpline& c, double rel_tol = 1e-4);

// L E - 2 pi^2 >= pi^2 (R - r)^2 / L^2.
InequalityReport check_enomoto(const ArcSpline& c, const Radii& radii, double tol = 1e-9);
// Strengthened bound: L E - 2 pi^2 >= pi^4 (R - r)^2 / L^2.
InequalityReport check_bonnesen_improved(const ArcSpline& c, const Radii& radii,
                                         double tol = 1e-9);

// (A(O) + A(O')) (E1 + E2)^2 >= pi^3 for disjoint convex sets held by arcs of
// energies E1, E2.
InequalityReport two_convex_bound(const ArcSpline& omega1, const ArcSpline& omega2, double e1,
                                  double e2, double tol = 1e-9);

// Residual k'' + k^3/2 of a densely sampled smooth closed curve; near-zero
// variance signals stationarity under area-preserving perturbations.
struct StationarityResidual {
  double mean = 0.0;
  double variance = 0.0;
  int samples = 0;
};
StationarityResidual euler_lagrange_residual(const std::vector<Vec2>& closed_points);

// Convexity probe used by the Gage report.
bool is_convex_curve(const ArcSpline& c);

// All checks bundled for reports.
std::vector<InequalityReport> run_all_checks(const ArcSpline& c, const Radii& radii);

}  // namespace elastica
