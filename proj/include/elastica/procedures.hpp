#pragma once

#include <string>
#include <vector>

#include "elastica/arc_structure.hpp"

namespace elastica {

// Three consecutive maximal arcs (concave, convex, concave) whose middle arc
// has total curvature in (0, pi].
struct Procedure1Site {
  MaximalArc concave_before;
  MaximalArc convex;
  MaximalArc concave_after;
};

// Concave maximal arc with total curvature <= -pi. The construction anchors
// at one endpoint; on class C curves the cusp endpoint is never the anchor.
struct Procedure2Site {
  MaximalArc arc;
  enum class Endpoint { UseP1, UseP2 };
  Endpoint endpoint_choice = Endpoint::UseP1;
  bool p1_allowed = true;
  bool p2_allowed = true;
};

enum class P1Event { F1, F2, F3, F4 };

const char* event_name(P1Event e);

// Extremal self-contact couples of a pinched curve: s1 <= s2 < s2' <= s1',
// gamma(s1) = gamma(s1'), gamma(s2) = gamma(s2').
struct PinchEvent {
  double s1 = 0.0;
  double s1_prime = 0.0;
  double s2 = 0.0;
  double s2_prime = 0.0;
  std::vector<std::pair<double, double>> contacts;
};

struct ReductionStep {
  int step = 0;
  std::string branch;
  int procedure = 0;  // 1 or 2
  std::string site;
  double eps_bar = 0.0;
  std::string event;  // F1..F4 or "pinch"
  bool multi_event = false;
  double area_before = 0.0;
  double area_after = 0.0;
  double energy_before = 0.0;
  double energy_after = 0.0;
  std::vector<ArcSpline> curves_after;
};

struct ReductionTrace {
  std::vector<ReductionStep> steps;
  bool budget_exceeded = false;
  std::string diagnostic;
};

struct ReductionOptions {
  int step_budget = 10000;
  double eps_tol = 1e-12;   // bisection tolerance for eps-bar, scaled by curve size
  double band = 1e-9;       // strictness band for site conditions
  int grid_per_arc = 64;    // held-arc scan density
};

// ---- Site discovery -------------------------------------------------------

std::vector<Procedure1Site> find_procedure1_sites(const ArcSpline& c, double band = 1e-9);
std::vector<Procedure2Site> find_procedure2_sites(const ArcSpline& c, double band = 1e-9);

// ---- Procedure 1 ----------------------------------------------------------

// Deformed curve at a given eps in (0, eps_bar). Throws when the construction
// cannot be carried out at this eps.
ArcSpline procedure1_step(const ArcSpline& c, const Procedure1Site& site, double eps);

struct Procedure1Result {
  ArcSpline curve;  // at eps_bar
  double eps_bar = 0.0;
  P1Event event = P1Event::F1;
  bool multi_event = false;
};
Procedure1Result procedure1_run(const ArcSpline& c, const Procedure1Site& site,
                                const ReductionOptions& opt = {});

// ---- Procedure 2 ----------------------------------------------------------

// Deformed curve at a given eps (energy is preserved exactly).
ArcSpline procedure2_step(const ArcSpline& c, const Procedure2Site& site, double eps);

// Perpendicular distance between the two parallel tangent lines of the site:
// the exact area decrease rate dA/deps.
double procedure2_area_rate(const ArcSpline& c, const Procedure2Site& site);

struct Procedure2Result {
  ArcSpline curve;  // pinched configuration at eps_bar
  double eps_bar = 0.0;
  PinchEvent pinch;
};
Procedure2Result procedure2_run(const ArcSpline& c, const Procedure2Site& site,
                                const ReductionOptions& opt = {});

// ---- Pinch splitting ------------------------------------------------------

// Self-contacts of a touching curve, clustered; used to build PinchEvents.
PinchEvent find_pinch_event(const ArcSpline& pinched, double cluster_tol = 1e-8);

// Split a pinched class K curve into two class C curves (outer piece around
// the first pinch point, inner piece between the last couple).
std::pair<ArcSpline, ArcSpline> split_at_pinch(const ArcSpline& pinched, const PinchEvent& ev);

// Split a pinched class C curve: keep the piece between the last couple.
ArcSpline split_at_pinch_cusp(const ArcSpline& pinched, const PinchEvent& ev);

// ---- Held-arc doubling and the final certificate ---------------------------

// Closed convex curve made of the held arc and its point reflection through
// the chord midpoint.
ArcSpline double_arc_to_convex(const ArcSpline& c, const HeldArcCertificate& cert);

struct InequalityCertificate {
  double source_area = 0.0;
  double source_energy = 0.0;
  double held_energy_1 = 0.0;
  double held_energy_2 = 0.0;
  double doubled_area_1 = 0.0;
  double doubled_area_2 = 0.0;
  double chain_value = 0.0;  // pi^3/8 (t^2+t'^2)(1/t+1/t')^2
  bool area_bound_ok = false;    // A(O) + A(O') <= 2 A_source
  bool energy_bound_ok = false;  // E1 + E2 <= E_source
  bool chain_ok = false;         // A E^2 >= chain >= pi^3
  bool valid() const { return area_bound_ok && energy_bound_ok && chain_ok; }
};

InequalityCertificate certify_final(const std::vector<ArcSpline>& finals, double source_area,
                                    double source_energy, const ReductionOptions& opt = {});

// ---- Driver -----------------------------------------------------------------

struct ReductionResult {
  std::vector<ArcSpline> finals;
  ReductionTrace trace;
  bool ok = false;
};

ReductionResult reduce(const ArcSpline& c, const ReductionOptions& opt = {});

}  // namespace elastica
