#include "elastica/arc_spline.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <sstream>
#include <stdexcept>

#include "elastica/arc_structure.hpp"
#include "elastica/intersect.hpp"

namespace elastica {

std::string ValidationReport::summary() const {
  if (issues.empty()) return "valid";
  std::ostringstream os;
  for (const auto& i : issues) {
    os << i.what;
    if (i.prim >= 0) os << " (primitive " << i.prim << ")";
    os << "; ";
  }
  return os.str();
}

ArcLengthTable::ArcLengthTable(const ArcSpline& c) {
  cumulative_.reserve(c.primitives.size() + 1);
  cumulative_.push_back(0.0);
  for (const auto& p : c.primitives) cumulative_.push_back(cumulative_.back() + primitive_length(p));
  total_ = cumulative_.back();
}

double ArcLengthTable::to_s(const CurvePoint& p) const {
  return cumulative_[p.prim] + p.t * length_of(p.prim);
}

CurvePoint ArcLengthTable::to_point(double s) const {
  const int n = static_cast<int>(cumulative_.size()) - 1;
  if (total_ <= 0.0) return {0, 0.0};
  s = std::fmod(s, total_);
  if (s < 0.0) s += total_;
  auto it = std::upper_bound(cumulative_.begin(), cumulative_.end(), s);
  int i = std::clamp(static_cast<int>(it - cumulative_.begin()) - 1, 0, n - 1);
  const double len = length_of(i);
  double t = len > 0.0 ? (s - cumulative_[i]) / len : 0.0;
  return {i, std::clamp(t, 0.0, 1.0)};
}

double length(const ArcSpline& c) {
  double L = 0.0;
  for (const auto& p : c.primitives) L += primitive_length(p);
  return L;
}

double signed_area(const ArcSpline& c) {
  double A = 0.0;
  for (const auto& p : c.primitives) A += primitive_area_term(p);
  return A;
}

double elastic_energy(const ArcSpline& c) {
  double E = 0.0;
  for (const auto& p : c.primitives) E += primitive_energy(p);
  return E;
}

double total_signed_sweep(const ArcSpline& c) {
  double k = 0.0;
  for (const auto& p : c.primitives) k += primitive_signed_sweep(p);
  return k;
}

double turning_number(const ArcSpline& c) {
  double total = total_signed_sweep(c);
  if (c.curve_class == CurveClass::C) total += kPi;
  return total / kTwoPi;
}

double total_curvature(const ArcSpline& c, const SubArcRef& sub) {
  const int n = c.size();
  double acc = 0.0;
  auto partial = [&](int i, double t0, double t1) {
    if (t1 > t0) acc += primitive_signed_sweep(c.primitives[i]) * (t1 - t0);
  };
  if (!sub.wraps_closure) {
    if (sub.start.prim == sub.end.prim) {
      partial(sub.start.prim, sub.start.t, sub.end.t);
    } else {
      partial(sub.start.prim, sub.start.t, 1.0);
      for (int i = sub.start.prim + 1; i < sub.end.prim; ++i) partial(i, 0.0, 1.0);
      partial(sub.end.prim, 0.0, sub.end.t);
    }
    return acc;
  }
  // wrapping traversal: start -> end of chain -> begin of chain -> end
  partial(sub.start.prim, sub.start.t, 1.0);
  for (int i = sub.start.prim + 1; i < n; ++i) partial(i, 0.0, 1.0);
  for (int i = 0; i < sub.end.prim; ++i) partial(i, 0.0, 1.0);
  partial(sub.end.prim, 0.0, sub.end.t);
  if (c.curve_class == CurveClass::C) acc += kPi;  // cusp jump
  return acc;
}

namespace {

void check_param_range(const ArcLengthTable& table, double s) {
  const double slack = 1e-6 * table.total();
  if (s < -slack || s > table.total() + slack)
    throw std::out_of_range("arc length parameter outside [0, L]");
}

}  // namespace

Vec2 point_at(const ArcSpline& c, double s) {
  ArcLengthTable table(c);
  check_param_range(table, s);
  CurvePoint p = table.to_point(s);
  return primitive_point(c.primitives[p.prim], p.t);
}

Vec2 tangent_at(const ArcSpline& c, double s) {
  ArcLengthTable table(c);
  check_param_range(table, s);
  CurvePoint p = table.to_point(s);
  return primitive_tangent(c.primitives[p.prim], p.t);
}

Vec2 normal_at(const ArcSpline& c, double s) { return perp(tangent_at(c, s)); }

double tangent_angle_at(const ArcSpline& c, const CurvePoint& p) {
  return angle_of(primitive_tangent(c.primitives[p.prim], p.t));
}

// ---- Winding number -----------------------------------------------------

namespace {

// Crossing-count winding using a ray from q. Retries with rotated rays when a
// hit lands too close to a primitive endpoint or is tangential.
int winding_by_ray(const ArcSpline& c, const Vec2& q, double tol) {
  std::mt19937_64 rng(0x9e3779b97f4a7c15ull);
  std::uniform_real_distribution<double> uni(0.0, kTwoPi);
  double phi = 0.612058;
  for (int attempt = 0; attempt < 32; ++attempt) {
    const Vec2 d = unit_from_angle(phi);
    double winding = 0.0;
    bool degenerate = false;
    for (const auto& p : c.primitives) {
      for (const auto& h : intersect_line_primitive(q, d, p, tol)) {
        if (h.along <= tol) continue;  // behind or at the origin
        if (h.tangential || h.t < 1e-9 || h.t > 1.0 - 1e-9) {
          degenerate = true;
          break;
        }
        // crossing sign: tangent vs ray normal
        const Vec2 tang = primitive_tangent(p, h.t);
        const double s = cross2(d, tang);
        if (std::abs(s) < 1e-9) {
          degenerate = true;
          break;
        }
        winding += s > 0.0 ? 1.0 : -1.0;
      }
      if (degenerate) break;
    }
    if (!degenerate) return static_cast<int>(std::lround(winding));
    phi = uni(rng);
  }
  return 0;  // give up: treat as outside
}

}  // namespace

double distance_to_curve(const ArcSpline& c, const Vec2& q) {
  double best = std::numeric_limits<double>::infinity();
  for (const auto& p : c.primitives) best = std::min(best, point_primitive_distance(q, p));
  return best;
}

int winding_number(const ArcSpline& c, const Vec2& q, bool* on_boundary, double tol) {
  const double d = distance_to_curve(c, q);
  if (on_boundary) *on_boundary = d <= tol;
  if (d <= tol) return 0;
  return winding_by_ray(c, q, tol);
}

// ---- Simplicity -----------------------------------------------------------

namespace {

bool joints_adjacent(const ArcSpline& c, int i, int j) {
  const int n = c.size();
  return (j == (i + 1) % n) || (i == (j + 1) % n);
}

}  // namespace

bool is_simple(const ArcSpline& c, SimplicityViolation* violation) {
  const int n = c.size();
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      auto hits = intersect_primitives(c.primitives[i], c.primitives[j], c.pos_tol);
      if (hits.empty()) continue;
      const bool adjacent = joints_adjacent(c, i, j);
      for (const auto& h : hits) {
        if (adjacent && !h.overlap) {
          // allowed only at the shared joint
          const Vec2 joint = (j == (i + 1) % n) ? primitive_end(c.primitives[i])
                                                : primitive_end(c.primitives[j]);
          if ((h.point - joint).norm() <= 10.0 * c.pos_tol) continue;
        }
        if (violation) *violation = {i, j, h.point};
        return false;
      }
    }
  }
  return true;
}

// ---- Sub-arc machinery ------------------------------------------------------

std::vector<Primitive> extract_piece(const ArcSpline& c, const SubArcRef& sub, double min_len) {
  const int n = c.size();
  std::vector<Primitive> out;
  auto push = [&](int i, double t0, double t1) {
    if (t1 - t0 <= 0.0) return;
    const double plen = primitive_length(c.primitives[i]) * (t1 - t0);
    if (plen < min_len) return;
    if (t0 <= 0.0 && t1 >= 1.0) out.push_back(c.primitives[i]);
    else out.push_back(primitive_slice(c.primitives[i], t0, t1));
  };
  if (!sub.wraps_closure) {
    if (sub.start.prim == sub.end.prim) {
      push(sub.start.prim, sub.start.t, sub.end.t);
    } else {
      push(sub.start.prim, sub.start.t, 1.0);
      for (int i = sub.start.prim + 1; i < sub.end.prim; ++i) push(i, 0.0, 1.0);
      push(sub.end.prim, 0.0, sub.end.t);
    }
    return out;
  }
  push(sub.start.prim, sub.start.t, 1.0);
  for (int i = sub.start.prim + 1; i < n; ++i) push(i, 0.0, 1.0);
  for (int i = 0; i < sub.end.prim; ++i) push(i, 0.0, 1.0);
  push(sub.end.prim, 0.0, sub.end.t);
  return out;
}

double min_self_distance(const ArcSpline& c, const SubArcRef& sub, double exclusion) {
  if (exclusion < 0.0) exclusion = 10.0 * c.pos_tol;
  ArcLengthTable table(c);
  const double L = table.total();
  double s0 = table.to_s(sub.start);
  double s1 = table.to_s(sub.end);
  double piece_len = sub.wraps_closure ? (L - s0) + s1 : s1 - s0;
  if (piece_len <= 0.0 || piece_len >= L) return std::numeric_limits<double>::infinity();

  // complement runs from s1 to s0 (forward, wrapping); trim both ends
  double c0 = s1 + exclusion;
  double comp_len = (L - piece_len) - 2.0 * exclusion;
  if (comp_len <= 0.0) return std::numeric_limits<double>::infinity();

  CurvePoint a = table.to_point(c0);
  CurvePoint b = table.to_point(std::fmod(c0 + comp_len, L));
  bool wraps = c0 + comp_len >= L;
  // guard: to_point wraps s by fmod, recompute the flag robustly
  SubArcRef comp{a, b, wraps};

  auto piece = extract_piece(c, sub);
  auto rest = extract_piece(c, comp);
  double best = std::numeric_limits<double>::infinity();
  for (const auto& pa : piece)
    for (const auto& pb : rest) best = std::min(best, primitive_distance(pa, pb).distance);
  return best;
}

// ---- Validation -------------------------------------------------------------

ValidationReport validate(const ArcSpline& c) {
  ValidationReport rep;
  const int n = c.size();
  if (n == 0) {
    rep.issues.push_back({"empty primitive list", -1});
    return rep;
  }
  if (n == 1 && c.curve_class == CurveClass::K) {
    // a closed regular curve needs sweep 2*pi, forbidden for a single arc
    rep.issues.push_back({"a closed curve needs at least two primitives", -1});
  }
  for (int i = 0; i < n; ++i) {
    const auto& p = c.primitives[i];
    if (const auto* s = std::get_if<Segment>(&p)) {
      if (!(s->from.allFinite() && s->to.allFinite()))
        rep.issues.push_back({"non-finite segment endpoint", i});
      else if ((s->to - s->from).norm() <= c.pos_tol)
        rep.issues.push_back({"degenerate segment", i});
    } else {
      const auto& a = std::get<Arc>(p);
      if (!(a.center.allFinite() && std::isfinite(a.start_angle) && std::isfinite(a.end_angle)))
        rep.issues.push_back({"non-finite arc data", i});
      else if (!(a.radius > 0.0))
        rep.issues.push_back({"arc radius must be positive", i});
      else {
        const double sw = a.ccw ? wrap_positive(a.end_angle - a.start_angle)
                                : wrap_positive(a.start_angle - a.end_angle);
        if (sw <= 0.0 || sw >= kTwoPi - c.ang_tol)
          rep.issues.push_back({"arc sweep must lie in (0, 2*pi)", i});
      }
    }
  }
  if (!rep.issues.empty()) return rep;  // geometry below assumes sane primitives

  // continuity and tangency at joints
  for (int i = 0; i < n; ++i) {
    const int j = (i + 1) % n;
    const Vec2 e = primitive_end(c.primitives[i]);
    const Vec2 s = primitive_start(c.primitives[j]);
    if ((e - s).norm() > c.pos_tol)
      rep.issues.push_back({"gap between consecutive primitives", i});
    const Vec2 t_in = primitive_tangent(c.primitives[i], 1.0);
    const Vec2 t_out = primitive_tangent(c.primitives[j], 0.0);
    const bool closure = (j == 0);
    if (closure && c.curve_class == CurveClass::C) {
      if (angle_distance(angle_of(t_out), angle_of(-t_in)) > c.ang_tol)
        rep.issues.push_back({"cusp requires reversed tangent at closure", i});
    } else {
      if (angle_distance(angle_of(t_out), angle_of(t_in)) > c.ang_tol)
        rep.issues.push_back({"tangent discontinuity at joint", i});
    }
  }

  // orientation
  const double A = signed_area(c);
  if (!(A > 0.0)) rep.issues.push_back({"curve must be positively oriented (signed area > 0)", -1});

  // rotation index
  const double turn = turning_number(c);
  if (std::abs(turn - 1.0) > 1e-6)
    rep.issues.push_back({"turning number must be 1 for a simple closed curve", -1});

  SimplicityViolation v;
  if (!is_simple(c, &v))
    rep.issues.push_back({"curve is not simple", v.prim_a});

  if (c.curve_class == CurveClass::C && rep.issues.empty()) {
    // external cusp: gamma'(L) points outside the region
    const Vec2 cusp = primitive_start(c.primitives[0]);
    const Vec2 t_in = primitive_tangent(c.primitives[n - 1], 1.0);
    const double L = length(c);
    const double delta = std::max(1e-6 * L, 100.0 * c.pos_tol);
    bool on_bd = false;
    const int w = winding_number(c, cusp + delta * t_in, &on_bd, c.pos_tol);
    if (on_bd || w != 0)
      rep.issues.push_back({"cusp tangent must point outside the enclosed region", -1});
  }
  return rep;
}

CurveMetrics metrics(const ArcSpline& c) {
  CurveMetrics m;
  m.length = length(c);
  m.area = signed_area(c);
  m.energy = elastic_energy(c);
  m.turning_number = turning_number(c);
  m.oscillation = oscillation_number(c);
  return m;
}

ArcSpline assemble(std::vector<Primitive> prims, CurveClass cls, double pos_tol, double ang_tol,
                   double min_len) {
  ArcSpline c;
  c.curve_class = cls;
  c.pos_tol = pos_tol;
  c.ang_tol = ang_tol;
  c.primitives.reserve(prims.size());
  for (auto& p : prims) {
    if (primitive_length(p) < min_len) continue;
    c.primitives.push_back(std::move(p));
  }
  return c;
}

ArcSpline translated(const ArcSpline& c, const Vec2& v) {
  ArcSpline out = c;
  for (auto& p : out.primitives) p = primitive_translate(p, v);
  return out;
}

ArcSpline transformed(const ArcSpline& c, const RigidMotion& m) {
  ArcSpline out = c;
  for (auto& p : out.primitives) p = primitive_transform(p, m);
  return out;
}

ArcSpline scaled(const ArcSpline& c, double lambda) {
  ArcSpline out = c;
  for (auto& p : out.primitives) p = primitive_scale(p, lambda);
  return out;
}

}  // namespace elastica
