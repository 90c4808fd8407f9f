#pragma once

#include <vector>

#include "elastica/geom.hpp"

namespace elastica {

// Closed polyline carrier for the discrete curve shortening flow.
struct PolyCurve {
  std::vector<Vec2> points;
  double resample_spacing = 0.0;
};

struct FlowRecord {
  double t = 0.0;
  double length = 0.0;
  double area = 0.0;
  double energy = 0.0;   // discrete elastic energy, (1/2) sum k^2 ds
  double dL_dt = 0.0;    // centered difference, filled after the run
  double bound = 0.0;    // -2 sqrt(pi^3 / (A0 - 2 pi t))
};

double poly_length(const PolyCurve& c);
double poly_area(const PolyCurve& c);
double poly_energy(const PolyCurve& c);
bool poly_simple(const PolyCurve& c);

PolyCurve make_poly(const std::vector<Vec2>& points);

// Resample to n points uniformly in arc length through a closed Catmull-Rom
// interpolant (plain chordal resampling of a polygon bleeds length).
PolyCurve resample_uniform(const PolyCurve& c, int n);

// One explicit Euler step of v = k n; dt must respect ~0.25 h^2.
// Throws when the step destroys simplicity.
PolyCurve csf_step(const PolyCurve& c, double dt);

struct FlowOptions {
  double dt_factor = 0.2;        // dt = dt_factor * spacing^2
  double stop_fraction = 0.9;    // stop at t >= stop_fraction * A0 / (2 pi)
  int max_steps = 2000000;
  int record_every = 25;
  int simplicity_check_every = 200;
  double resample_ratio = 1.25;  // resample when max/min edge exceeds this
};

struct FlowResult {
  std::vector<FlowRecord> records;
  bool bound_satisfied = true;    // dL/dt <= bound + tolerance at each record
  double max_bound_violation = 0.0;
  double max_area_rate_error = 0.0;  // |dA/dt + 2 pi| over the recorded span
  bool completed = false;
};

FlowResult csf_run(const PolyCurve& start, const FlowOptions& opt = {});

}  // namespace elastica
