#include "elastica/generators.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <stdexcept>

#include "elastica/arc_structure.hpp"

namespace elastica {

ArcSpline make_circle(double radius, const Vec2& center) {
  if (!(radius > 0.0)) throw std::invalid_argument("make_circle: radius must be positive");
  ArcSpline c;
  for (int k = 0; k < 4; ++k)
    c.primitives.push_back(Arc{center, radius, k * kPi / 2.0, (k + 1) * kPi / 2.0, true});
  return c;
}

ArcSpline make_stadium(double r, double d) {
  if (!(r > 0.0 && d > 0.0)) throw std::invalid_argument("make_stadium: r and d must be positive");
  ArcSpline c;
  const double h = d / 2.0;
  c.primitives.push_back(Segment{{-h, -r}, {h, -r}});
  c.primitives.push_back(Arc{{h, 0.0}, r, -kPi / 2.0, kPi / 2.0, true});
  c.primitives.push_back(Segment{{h, r}, {-h, r}});
  c.primitives.push_back(Arc{{-h, 0.0}, r, kPi / 2.0, 3.0 * kPi / 2.0, true});
  return c;
}

ArcSpline make_rounded_polygon(const std::vector<Vec2>& vertices, double fillet_radius) {
  const int n = static_cast<int>(vertices.size());
  if (n < 3) throw std::invalid_argument("make_rounded_polygon: need at least 3 vertices");
  if (!(fillet_radius > 0.0))
    throw std::invalid_argument("make_rounded_polygon: fillet radius must be positive");
  struct Corner {
    Vec2 t_in, t_out, center;
    double a0, a1;
  };
  std::vector<Corner> corners(n);
  for (int i = 0; i < n; ++i) {
    const Vec2& prev = vertices[(i + n - 1) % n];
    const Vec2& v = vertices[i];
    const Vec2& next = vertices[(i + 1) % n];
    const Vec2 u_in = (v - prev).normalized();
    const Vec2 u_out = (next - v).normalized();
    const double turn = wrap_signed(angle_of(u_out) - angle_of(u_in));
    if (turn <= 0.0)
      throw std::invalid_argument("make_rounded_polygon: polygon must be convex and ccw");
    const double setback = fillet_radius * std::tan(turn / 2.0);
    Corner& c = corners[i];
    c.t_in = v - setback * u_in;
    c.t_out = v + setback * u_out;
    c.center = c.t_in + fillet_radius * perp(u_in);
    c.a0 = angle_of(c.t_in - c.center);
    c.a1 = angle_of(c.t_out - c.center);
  }
  ArcSpline c;
  for (int i = 0; i < n; ++i) {
    const Corner& a = corners[i];
    const Corner& b = corners[(i + 1) % n];
    c.primitives.push_back(Arc{a.center, fillet_radius, a.a0, a.a1, true});
    if ((b.t_in - a.t_out).norm() > 1e-12) c.primitives.push_back(Segment{a.t_out, b.t_in});
  }
  return c;
}

// ---- Figure-1 family ------------------------------------------------------------

namespace {

// The bone curve at explicit bar length and thickness.
ArcSpline make_bone(double d, double delta, const Figure1Params& p) {
  const double b = p.blob_side;
  const double r = p.corner_radius;
  const double f = p.fillet_radius;
  const double xf = d / 2.0;
  const double xi = xf + f;  // inner blob face
  const double hd = delta / 2.0;

  ArcSpline c;
  auto seg = [&](double x0, double y0, double x1, double y1) {
    c.primitives.push_back(Segment{{x0, y0}, {x1, y1}});
  };
  auto arc = [&](double cx, double cy, double radius, double a0, double a1, bool ccw) {
    c.primitives.push_back(Arc{{cx, cy}, radius, a0, a1, ccw});
  };

  // bar bottom edge, rightward
  seg(-xf, -hd, xf, -hd);
  // concave fillet into the right blob (bottom)
  arc(xf, -hd - f, f, kPi / 2.0, 0.0, false);
  seg(xi, -hd - f, xi, -(b / 2.0 - r));
  // right blob, counterclockwise
  arc(xi + r, -(b / 2.0 - r), r, kPi, 3.0 * kPi / 2.0, true);
  seg(xi + r, -b / 2.0, xi + b - r, -b / 2.0);
  arc(xi + b - r, -(b / 2.0 - r), r, 3.0 * kPi / 2.0, kTwoPi, true);
  seg(xi + b, -(b / 2.0 - r), xi + b, b / 2.0 - r);
  arc(xi + b - r, b / 2.0 - r, r, 0.0, kPi / 2.0, true);
  seg(xi + b - r, b / 2.0, xi + r, b / 2.0);
  arc(xi + r, b / 2.0 - r, r, kPi / 2.0, kPi, true);
  seg(xi, b / 2.0 - r, xi, hd + f);
  // concave fillet back onto the bar (top right)
  arc(xf, hd + f, f, 0.0, -kPi / 2.0, false);
  // bar top edge, leftward
  seg(xf, hd, -xf, hd);
  // concave fillet into the left blob (top)
  arc(-xf, hd + f, f, -kPi / 2.0, -kPi, false);
  seg(-xi, hd + f, -xi, b / 2.0 - r);
  // left blob, counterclockwise
  arc(-xi - r, b / 2.0 - r, r, 0.0, kPi / 2.0, true);
  seg(-xi - r, b / 2.0, -xi - b + r, b / 2.0);
  arc(-xi - b + r, b / 2.0 - r, r, kPi / 2.0, kPi, true);
  seg(-xi - b, b / 2.0 - r, -xi - b, -(b / 2.0 - r));
  arc(-xi - b + r, -(b / 2.0 - r), r, kPi, 3.0 * kPi / 2.0, true);
  seg(-xi - b + r, -b / 2.0, -xi - r, -b / 2.0);
  arc(-xi - r, -(b / 2.0 - r), r, 3.0 * kPi / 2.0, kTwoPi, true);
  seg(-xi, -(b / 2.0 - r), -xi, -hd - f);
  // concave fillet back onto the bar (bottom left)
  arc(-xf, -hd - f, f, kPi, kPi / 2.0, false);
  return c;
}

double bone_delta_max(const Figure1Params& p) {
  // inner blob faces need positive straight pieces above and below the bar
  return p.blob_side - 2.0 * p.corner_radius - 2.0 * p.fillet_radius;
}

// Area is affine in the bar thickness at fixed bar length; solve for the target.
double solve_bone_delta(double d, double target_area, const Figure1Params& p) {
  const double dmax = bone_delta_max(p);
  const double da = 0.25 * dmax;
  const double db = 0.75 * dmax;
  const double Aa = signed_area(make_bone(d, da, p));
  const double Ab = signed_area(make_bone(d, db, p));
  const double slope = (Ab - Aa) / (db - da);
  return da + (target_area - Aa) / slope;
}

}  // namespace

ArcSpline make_figure1_family(int n, double base_area, const Figure1Params& p) {
  if (n < 1) throw std::invalid_argument("make_figure1_family: n must be positive");
  if (bone_delta_max(p) <= 0.0)
    throw std::invalid_argument("make_figure1_family: blob too small for the corner radii");
  if (base_area <= 0.0) base_area = signed_area(make_bone(p.d0, p.delta1, p));
  const double d = p.d0 * n;
  const double delta = solve_bone_delta(d, base_area, p);
  const double min_delta = 1e-7;
  if (delta <= min_delta || delta >= bone_delta_max(p)) {
    throw std::runtime_error("make_figure1_family: no feasible bar thickness at n = " +
                             std::to_string(n) + " (max feasible n = " +
                             std::to_string(figure1_max_feasible_n(base_area, p)) + ")");
  }
  return make_bone(d, delta, p);
}

int figure1_max_feasible_n(double base_area, const Figure1Params& p) {
  if (base_area <= 0.0) base_area = signed_area(make_bone(p.d0, p.delta1, p));
  int n = 0;
  for (int k = 1; k < 100000; ++k) {
    const double delta = solve_bone_delta(p.d0 * k, base_area, p);
    if (delta <= 1e-7 || delta >= bone_delta_max(p)) break;
    n = k;
  }
  return n;
}

// ---- Gear and friends ------------------------------------------------------------

ArcSpline make_gear(int lobes, double bump_radius, double bump_sweep, double dent_radius) {
  if (lobes < 2) throw std::invalid_argument("make_gear: need at least 2 lobes");
  const double dent_sweep = bump_sweep - kTwoPi / lobes;
  if (!(dent_sweep > 0.0))
    throw std::invalid_argument("make_gear: bump sweep must exceed 2*pi/lobes");
  if (!(bump_radius > 0.0 && dent_radius > 0.0))
    throw std::invalid_argument("make_gear: radii must be positive");

  // one period built from the origin with horizontal start tangent
  std::vector<Primitive> period;
  Vec2 pos = Vec2::Zero();
  double psi = 0.0;
  {
    const Vec2 ctr = pos + bump_radius * perp(unit_from_angle(psi));
    const double a0 = angle_of(pos - ctr);
    period.push_back(Arc{ctr, bump_radius, a0, a0 + bump_sweep, true});
    pos = ctr + bump_radius * unit_from_angle(a0 + bump_sweep);
    psi += bump_sweep;
  }
  {
    const Vec2 ctr = pos - dent_radius * perp(unit_from_angle(psi));
    const double a0 = angle_of(pos - ctr);
    period.push_back(Arc{ctr, dent_radius, a0, a0 - dent_sweep, false});
    pos = ctr + dent_radius * unit_from_angle(a0 - dent_sweep);
    psi -= dent_sweep;
  }
  // the period realizes a rotation by 2*pi/lobes about a fixed center z
  const double phi = kTwoPi / lobes;
  Eigen::Matrix2d R = Eigen::Rotation2Dd(phi).toRotationMatrix();
  Eigen::Matrix2d M = Eigen::Matrix2d::Identity() - R;
  Vec2 T = pos - R * Vec2::Zero();
  Vec2 z = M.colPivHouseholderQr().solve(T);

  ArcSpline c;
  for (int k = 0; k < lobes; ++k) {
    RigidMotion m;
    m.theta = phi * k;
    m.translation = z - Eigen::Rotation2Dd(m.theta) * z;
    for (const auto& p : period) c.primitives.push_back(primitive_transform(p, m));
  }
  // center at the origin
  return translated(c, -z);
}

ArcSpline make_dented_oval(double body_radius, double dent_radius, double dent_sweep) {
  if (!(dent_sweep > 0.0 && dent_sweep < kPi))
    throw std::invalid_argument("make_dented_oval: dent sweep must lie in (0, pi)");
  const double phi = dent_sweep / 2.0;  // fillet sweep on each side of the dent
  const double rf = 0.5 * body_radius;  // entry/exit fillet radius
  const double rd = dent_radius;
  // dent horizontal half-extent along the top edge
  const double half = (rf + rd) * std::sin(phi);
  const double d = std::max(4.0 * half, 2.5 * body_radius);
  ArcSpline stadium = make_stadium(body_radius, d);

  // carve the dent into the top edge (traversed right to left)
  const double y = body_radius;
  ArcSpline c;
  c.primitives.push_back(stadium.primitives[0]);
  c.primitives.push_back(stadium.primitives[1]);
  // top edge from (d/2, y) to dent entry
  const double x_entry = half;
  c.primitives.push_back(Segment{{d / 2.0, y}, {x_entry, y}});
  // entry fillet: psi from pi to pi + phi
  {
    const Vec2 ctr{x_entry, y - rf};
    c.primitives.push_back(Arc{ctr, rf, kPi / 2.0, kPi / 2.0 + phi, true});
  }
  // concave dent arc: psi from pi + phi down to pi - phi
  {
    const Vec2 join{x_entry - rf * std::sin(phi), y - rf * (1.0 - std::cos(phi))};
    // cw arc: center sits on the right of the travel direction
    const Vec2 ctr = join - rd * perp(unit_from_angle(kPi + phi));
    const double a0 = angle_of(join - ctr);
    c.primitives.push_back(Arc{ctr, rd, a0, a0 - 2.0 * phi, false});
  }
  // exit fillet: psi from pi - phi back to pi
  {
    const Vec2 ctr{-x_entry, y - rf};
    c.primitives.push_back(Arc{ctr, rf, kPi / 2.0 - phi, kPi / 2.0, true});
  }
  c.primitives.push_back(Segment{{-x_entry, y}, {-d / 2.0, y}});
  c.primitives.push_back(stadium.primitives[3]);
  return c;
}

namespace {

// Bend angles below this become straight segments; biarc outputs carry a
// matching (looser) tolerance since huge-radius arcs lose absolute precision.
constexpr double kBiarcAngTol = 1e-8;
constexpr double kBiarcPosTol = 1e-8;

// Arc (or segment) from p with unit tangent t to q; the chord decides the bend.
void append_arc_from_tangent(std::vector<Primitive>& prims, const Vec2& p, const Vec2& t,
                             const Vec2& q) {
  const Vec2 d = q - p;
  const double len = d.norm();
  if (len < 1e-15) return;
  const double bend = perp(t).dot(d);
  if (std::abs(bend) < 0.5 * kBiarcAngTol * len) {
    prims.push_back(Segment{p, q});
    return;
  }
  const double radius_signed = d.squaredNorm() / (2.0 * bend);
  const Vec2 center = p + radius_signed * perp(t);
  const bool ccw = radius_signed > 0.0;
  prims.push_back(
      Arc{center, std::abs(radius_signed), angle_of(p - center), angle_of(q - center), ccw});
}

}  // namespace

ArcSpline make_rolled_hook(const RolledHookParams& p) {
  ArcSpline c;
  Vec2 pos(4.611, 2.949);
  double psi = kPi;
  auto add_arc = [&](double r, double sweep, bool ccw) {
    const Vec2 ctr = ccw ? Vec2(pos + r * perp(unit_from_angle(psi)))
                         : Vec2(pos - r * perp(unit_from_angle(psi)));
    const double a0 = angle_of(pos - ctr);
    const double a1 = ccw ? a0 + sweep : a0 - sweep;
    c.primitives.push_back(Arc{ctr, r, a0, a1, ccw});
    pos = ctr + r * unit_from_angle(a1);
    psi += ccw ? sweep : -sweep;
  };
  add_arc(6.0, 0.3 * kPi, true);        // gentle sweep
  add_arc(0.3, 0.7 * kPi, true);        // hook tip
  add_arc(0.1, 0.3 * kPi, false);       // dent at the hook base
  add_arc(p.lobe_radius, p.lobe_sweep, true);   // tucked lobe
  add_arc(p.s_radius, p.s_sweep, false);        // closure S over the lobe
  if (p.mouth_run > 0.0) {
    const Vec2 to = pos + p.mouth_run * unit_from_angle(psi);
    c.primitives.push_back(Segment{pos, to});
    pos = to;
  }
  // biarc back to the start, arriving with the starting tangent
  const Vec2 target(4.611, 2.949);
  const Vec2 t0 = unit_from_angle(psi);
  const Vec2 t1 = unit_from_angle(kPi);
  const Vec2 v = target - pos;
  const double bsum = v.dot(t0 + t1);
  const double qa = 2.0 * t0.dot(t1) - 2.0;
  double dlen = -1.0;
  if (std::abs(qa) < 1e-12) {
    if (std::abs(bsum) > 1e-12) dlen = v.squaredNorm() / (2.0 * bsum);
  } else {
    const double disc = bsum * bsum - qa * v.squaredNorm();
    if (disc >= 0.0) dlen = std::max((bsum - std::sqrt(disc)) / qa, (bsum + std::sqrt(disc)) / qa);
  }
  if (!(dlen > 0.0)) throw std::runtime_error("make_rolled_hook: closure biarc failed");
  const Vec2 u = pos + dlen * t0;
  const Vec2 w = target - dlen * t1;
  const Vec2 joint = 0.5 * (u + w);
  append_arc_from_tangent(c.primitives, pos, t0, joint);
  const Vec2 wu = w - u;
  append_arc_from_tangent(c.primitives, joint, wu.norm() > 1e-14 ? Vec2(wu.normalized()) : t0,
                          target);
  return c;
}

ArcSpline make_bay_dumbbell(const DumbbellParams& p) {
  const double R = p.lobe_radius;
  const double cx = p.half_span;
  const double a = p.bay_radius;
  const double w = p.wall_depth;
  const double fr = p.fillet_radius;
  const double x0 = p.asymmetry;
  if (!(R > 0 && cx > R && a > 0 && fr > 0 && w >= 0))
    throw std::invalid_argument("make_bay_dumbbell: bad parameters");
  if (std::abs(x0) + a + fr >= cx - 1e-9)
    throw std::invalid_argument("make_bay_dumbbell: bay does not fit between the lobes");
  if (R - fr - w - a <= 0.0)
    throw std::invalid_argument("make_bay_dumbbell: bay floors would overlap the axis");

  ArcSpline c;
  auto seg = [&](Vec2 q0, Vec2 q1) {
    if ((q1 - q0).norm() > 1e-12) c.primitives.push_back(Segment{q0, q1});
  };
  const double yf = R - fr;       // fillet center height
  const double yw = yf - w;       // bay floor circle center height
  // right lobe from bottom to top
  c.primitives.push_back(Arc{{cx, 0.0}, R, -kPi / 2.0, kPi / 2.0, true});
  // top edge rightward part, bay at +x0
  seg({cx, R}, {x0 + a + fr, R});
  c.primitives.push_back(Arc{{x0 + a + fr, yf}, fr, kPi / 2.0, kPi, true});
  seg({x0 + a, yf}, {x0 + a, yw});
  c.primitives.push_back(Arc{{x0, yw}, a, 0.0, -kPi, false});
  seg({x0 - a, yw}, {x0 - a, yf});
  c.primitives.push_back(Arc{{x0 - a - fr, yf}, fr, 0.0, kPi / 2.0, true});
  seg({x0 - a - fr, R}, {-cx, R});
  // left lobe
  c.primitives.push_back(Arc{{-cx, 0.0}, R, kPi / 2.0, 3.0 * kPi / 2.0, true});
  // bottom edge with the mirrored bay at -x0
  seg({-cx, -R}, {-x0 - a - fr, -R});
  c.primitives.push_back(Arc{{-x0 - a - fr, -yf}, fr, -kPi / 2.0, 0.0, true});
  seg({-x0 - a, -yf}, {-x0 - a, -yw});
  c.primitives.push_back(Arc{{-x0, -yw}, a, kPi, 0.0, false});
  seg({-x0 + a, -yw}, {-x0 + a, -yf});
  c.primitives.push_back(Arc{{-x0 + a + fr, -yf}, fr, kPi, 3.0 * kPi / 2.0, true});
  seg({-x0 + a + fr, -R}, {cx, -R});
  return c;
}

namespace {

// Top bay carved into the edge y = +R at x0 (traversed right to left).
void emit_top_bay(std::vector<Primitive>& prims, double R, double x0, double a, double w,
                  double fr) {
  const double yf = R - fr;
  const double yw = yf - w;
  prims.push_back(Arc{{x0 + a + fr, yf}, fr, kPi / 2.0, kPi, true});
  if (w > 1e-12) prims.push_back(Segment{{x0 + a, yf}, {x0 + a, yw}});
  prims.push_back(Arc{{x0, yw}, a, 0.0, -kPi, false});
  if (w > 1e-12) prims.push_back(Segment{{x0 - a, yw}, {x0 - a, yf}});
  prims.push_back(Arc{{x0 - a - fr, yf}, fr, 0.0, kPi / 2.0, true});
}

// Mirrored bay in the edge y = -R at x0 (traversed left to right).
void emit_bottom_bay(std::vector<Primitive>& prims, double R, double x0, double a, double w,
                     double fr) {
  const double yf = R - fr;
  const double yw = yf - w;
  prims.push_back(Arc{{x0 - a - fr, -yf}, fr, -kPi / 2.0, 0.0, true});
  if (w > 1e-12) prims.push_back(Segment{{x0 - a, -yf}, {x0 - a, -yw}});
  prims.push_back(Arc{{x0, -yw}, a, kPi, 0.0, false});
  if (w > 1e-12) prims.push_back(Segment{{x0 + a, -yw}, {x0 + a, -yf}});
  prims.push_back(Arc{{x0 + a + fr, -yf}, fr, kPi, 3.0 * kPi / 2.0, true});
}

// Headland poking up from the edge y = -R at xh (traversed left to right):
// base fillet, flank, concave tip cap, flank, base fillet.
void emit_headland(std::vector<Primitive>& prims, double R, double xh, double rb, double fb,
                   double tip_center_y) {
  prims.push_back(Arc{{xh - rb - fb, -R + fb}, fb, -kPi / 2.0, 0.0, true});
  prims.push_back(Segment{{xh - rb, -R + fb}, {xh - rb, tip_center_y}});
  prims.push_back(Arc{{xh, tip_center_y}, rb, kPi, 0.0, false});
  prims.push_back(Segment{{xh + rb, tip_center_y}, {xh + rb, -R + fb}});
  prims.push_back(Arc{{xh + rb + fb, -R + fb}, fb, kPi, 3.0 * kPi / 2.0, true});
}

}  // namespace

ArcSpline make_canyon_dumbbell() {
  const double R = 3.0, cx = 6.0;
  const double a = 1.2, w = 0.5, fr = 0.7;   // top bay
  const double rb = 0.25, fb = 0.25;         // headlands
  const double xh = 0.55, tip_c = -0.25;
  ArcSpline c;
  c.primitives.push_back(Arc{{cx, 0.0}, R, -kPi / 2.0, kPi / 2.0, true});
  c.primitives.push_back(Segment{{cx, R}, {a + fr, R}});
  emit_top_bay(c.primitives, R, 0.0, a, w, fr);
  c.primitives.push_back(Segment{{-a - fr, R}, {-cx, R}});
  c.primitives.push_back(Arc{{-cx, 0.0}, R, kPi / 2.0, 3.0 * kPi / 2.0, true});
  c.primitives.push_back(Segment{{-cx, -R}, {-xh - rb - fb, -R}});
  emit_headland(c.primitives, R, -xh, rb, fb, tip_c);
  c.primitives.push_back(Segment{{-xh + rb + fb, -R}, {xh - rb - fb, -R}});
  emit_headland(c.primitives, R, xh, rb, fb, tip_c);
  c.primitives.push_back(Segment{{xh + rb + fb, -R}, {cx, -R}});
  return c;
}

ArcSpline make_two_neck_dumbbell() {
  // a balloon lobe (sweep > pi) between the necks keeps their concave runs
  // from merging, so the piece left after the first pinch still carries a
  // procedure-2 site of its own
  const double R = 3.0, cx = 8.0, x0 = 3.5;
  const double a = 1.0, fr = 0.7;
  const double w_deep = 0.9, w_shallow = 0.4;
  const double bf = 0.45, beta = 0.6 * kPi;  // balloon neck fillets
  const double rb = 0.7, sb = 1.2 * kPi;     // balloon cap

  // balloon chain on the top edge, traversed right to left from (xb_s, R)
  const double xb_s = 1.5;
  std::vector<Primitive> balloon;
  Vec2 pos(xb_s, R);
  double psi = kPi;
  auto add_arc = [&](double r, double sweep, bool ccw) {
    const Vec2 ctr = ccw ? Vec2(pos + r * perp(unit_from_angle(psi)))
                         : Vec2(pos - r * perp(unit_from_angle(psi)));
    const double a0 = angle_of(pos - ctr);
    const double a1 = ccw ? a0 + sweep : a0 - sweep;
    balloon.push_back(Arc{ctr, r, a0, a1, ccw});
    pos = ctr + r * unit_from_angle(a1);
    psi += ccw ? sweep : -sweep;
  };
  add_arc(bf, beta, false);
  add_arc(rb, sb, true);
  add_arc(bf, beta, false);
  const double xb_e = pos.x();  // landing abscissa on the top edge

  ArcSpline c;
  c.primitives.push_back(Arc{{cx, 0.0}, R, -kPi / 2.0, kPi / 2.0, true});
  c.primitives.push_back(Segment{{cx, R}, {x0 + a + fr, R}});
  emit_top_bay(c.primitives, R, x0, a, w_deep, fr);
  c.primitives.push_back(Segment{{x0 - a - fr, R}, {xb_s, R}});
  for (const auto& p : balloon) c.primitives.push_back(p);
  c.primitives.push_back(Segment{{xb_e, R}, {-x0 + a + fr, R}});
  emit_top_bay(c.primitives, R, -x0, a, w_shallow, fr);
  c.primitives.push_back(Segment{{-x0 - a - fr, R}, {-cx, R}});
  c.primitives.push_back(Arc{{-cx, 0.0}, R, kPi / 2.0, 3.0 * kPi / 2.0, true});
  c.primitives.push_back(Segment{{-cx, -R}, {-x0 - a - fr, -R}});
  emit_bottom_bay(c.primitives, R, -x0, a, w_shallow, fr);
  c.primitives.push_back(Segment{{-x0 + a + fr, -R}, {-xb_s, -R}});
  for (const auto& p : balloon) c.primitives.push_back(primitive_point_reflect(p, Vec2(0, 0)));
  c.primitives.push_back(Segment{{-xb_e, -R}, {x0 - a - fr, -R}});
  emit_bottom_bay(c.primitives, R, x0, a, w_deep, fr);
  c.primitives.push_back(Segment{{x0 + a + fr, -R}, {cx, -R}});
  return c;
}

// ---- Biarcs -------------------------------------------------------------------------

ArcSpline biarc_fit(const std::vector<SampleTangent>& samples, double /*tol*/) {
  const int n = static_cast<int>(samples.size());
  if (n < 3) throw std::invalid_argument("biarc_fit: need at least 3 samples");
  ArcSpline c;
  c.pos_tol = kBiarcPosTol;
  c.ang_tol = kBiarcAngTol;
  for (int i = 0; i < n; ++i) {
    const SampleTangent& s0 = samples[i];
    const SampleTangent& s1 = samples[(i + 1) % n];
    const Vec2 v = s1.point - s0.point;
    const double vlen = v.norm();
    if (vlen < 1e-15) continue;
    const Vec2 t0 = s0.tangent.normalized();
    const Vec2 t1 = s1.tangent.normalized();
    const double cos01 = t0.dot(t1);
    const double bsum = v.dot(t0 + t1);
    const double qa = 2.0 * cos01 - 2.0;
    bool straight = false;
    double dlen = 0.0;
    if (std::abs(qa) < 1e-12) {
      if (std::abs(bsum) < 1e-15) straight = true;
      else dlen = v.squaredNorm() / (2.0 * bsum);
    } else {
      const double disc = bsum * bsum - qa * v.squaredNorm();
      if (disc < 0.0) {
        straight = true;
      } else {
        const double sq = std::sqrt(disc);
        dlen = std::max((bsum - sq) / qa, (bsum + sq) / qa);
      }
    }
    if (!straight && !(dlen > 0.0 && dlen < 100.0 * vlen)) straight = true;
    if (straight) {
      c.primitives.push_back(Segment{s0.point, s1.point});
      continue;
    }
    const Vec2 u = s0.point + dlen * t0;
    const Vec2 w = s1.point - dlen * t1;
    const Vec2 wu = w - u;
    const Vec2 joint = 0.5 * (u + w);
    const Vec2 tj = wu.norm() > 1e-15 ? Vec2(wu.normalized()) : t0;
    append_arc_from_tangent(c.primitives, s0.point, t0, joint);
    append_arc_from_tangent(c.primitives, joint, tj, s1.point);
  }
  return c;
}

ArcSpline make_biarc_ellipse(double a, double b, int samples) {
  std::vector<SampleTangent> pts(samples);
  for (int i = 0; i < samples; ++i) {
    const double u = kTwoPi * i / samples;
    pts[i].point = Vec2(a * std::cos(u), b * std::sin(u));
    pts[i].tangent = Vec2(-a * std::sin(u), b * std::cos(u)).normalized();
  }
  return biarc_fit(pts);
}

ArcSpline make_random_simple(std::uint64_t seed, int complexity, double fit_tol) {
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> uni(-1.0, 1.0);
  const int modes = 2 + std::max(0, complexity);
  const double base_amp = 0.02 + 0.05 * complexity;
  std::vector<double> ac(modes + 1, 0.0), as(modes + 1, 0.0);
  for (int m = 2; m <= modes; ++m) {
    ac[m] = base_amp * uni(rng) / std::pow(m, 1.5);
    as[m] = base_amp * uni(rng) / std::pow(m, 1.5);
  }
  for (int attempt = 0; attempt < 100; ++attempt) {
    auto rho = [&](double th) {
      double r = 1.0;
      for (int m = 2; m <= modes; ++m) r += ac[m] * std::cos(m * th) + as[m] * std::sin(m * th);
      return r;
    };
    auto drho = [&](double th) {
      double r = 0.0;
      for (int m = 2; m <= modes; ++m)
        r += m * (-ac[m] * std::sin(m * th) + as[m] * std::cos(m * th));
      return r;
    };
    int n = std::max(48, 24 * modes);
    ArcSpline fit;
    for (int refine = 0; refine < 4; ++refine) {
      std::vector<SampleTangent> pts(n);
      for (int i = 0; i < n; ++i) {
        const double th = kTwoPi * i / n;
        const double r = rho(th), dr = drho(th);
        pts[i].point = r * unit_from_angle(th);
        pts[i].tangent = (dr * unit_from_angle(th) + r * perp(unit_from_angle(th))).normalized();
      }
      fit = biarc_fit(pts, fit_tol);
      // deviation probe halfway between samples
      double worst = 0.0;
      for (int i = 0; i < n; ++i) {
        const double th = kTwoPi * (i + 0.5) / n;
        const Vec2 q = rho(th) * unit_from_angle(th);
        worst = std::max(worst, distance_to_curve(fit, q));
      }
      if (worst <= fit_tol) break;
      n *= 2;
    }
    if (validate(fit).valid()) return fit;
    for (int m = 2; m <= modes; ++m) {
      ac[m] *= 0.7;
      as[m] *= 0.7;
    }
  }
  throw std::runtime_error("make_random_simple: failed to produce a simple curve");
}

std::vector<Vec2> sample_points(const ArcSpline& c, int per_primitive) {
  std::vector<Vec2> pts;
  pts.reserve(c.primitives.size() * per_primitive);
  for (const auto& p : c.primitives)
    for (int k = 0; k < per_primitive; ++k)
      pts.push_back(primitive_point(p, static_cast<double>(k) / per_primitive));
  return pts;
}

std::vector<Vec2> sample_ellipse(double a, double b, int n) {
  std::vector<Vec2> pts(n);
  for (int i = 0; i < n; ++i) {
    const double u = kTwoPi * i / n;
    pts[i] = Vec2(a * std::cos(u), b * std::sin(u));
  }
  return pts;
}

}  // namespace elastica
