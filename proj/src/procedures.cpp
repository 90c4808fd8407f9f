#include "elastica/procedures.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <stdexcept>

#include "elastica/intersect.hpp"

namespace elastica {

const char* event_name(P1Event e) {
  switch (e) {
    case P1Event::F1: return "F1";
    case P1Event::F2: return "F2";
    case P1Event::F3: return "F3";
    case P1Event::F4: return "F4";
  }
  return "?";
}

// ---- Site discovery ---------------------------------------------------------

std::vector<Procedure1Site> find_procedure1_sites(const ArcSpline& c, double band) {
  std::vector<Procedure1Site> sites;
  auto arcs = decompose_maximal_arcs(c);
  const int m = static_cast<int>(arcs.size());
  if (m < 3) return sites;
  // arcs come out in orientation order; for class K the list is cyclic
  const bool cyclic = c.curve_class == CurveClass::K;
  for (int i = 0; i < m; ++i) {
    const int prev = cyclic ? (i + m - 1) % m : i - 1;
    const int next = cyclic ? (i + 1) % m : i + 1;
    if (prev < 0 || next >= m) continue;
    if (prev == i || next == i || prev == next) continue;
    if (arcs[i].sign != ArcSign::Convex) continue;
    if (arcs[prev].sign != ArcSign::Concave || arcs[next].sign != ArcSign::Concave) continue;
    if (!(arcs[i].total_curvature > 0.0 && arcs[i].total_curvature <= kPi + band)) continue;
    sites.push_back({arcs[prev], arcs[i], arcs[next]});
  }
  std::sort(sites.begin(), sites.end(), [&](const Procedure1Site& a, const Procedure1Site& b) {
    return span_interval(c, a.convex.span).first < span_interval(c, b.convex.span).first;
  });
  return sites;
}

std::vector<Procedure2Site> find_procedure2_sites(const ArcSpline& c, double band) {
  std::vector<Procedure2Site> sites;
  const int n = c.size();
  for (const auto& m : decompose_maximal_arcs(c)) {
    if (m.sign != ArcSign::Concave) continue;
    if (!(m.total_curvature <= -kPi + band)) continue;
    Procedure2Site site;
    site.arc = m;
    if (c.curve_class == CurveClass::C) {
      site.p1_allowed = !(m.span.start.prim == 0 && m.span.start.t == 0.0);
      site.p2_allowed = !(m.span.end.prim == n - 1 && m.span.end.t == 1.0);
    }
    site.endpoint_choice =
        site.p1_allowed ? Procedure2Site::Endpoint::UseP1 : Procedure2Site::Endpoint::UseP2;
    sites.push_back(site);
  }
  std::sort(sites.begin(), sites.end(), [&](const Procedure2Site& a, const Procedure2Site& b) {
    return span_interval(c, a.arc.span).first < span_interval(c, b.arc.span).first;
  });
  return sites;
}

// ---- Procedure 1 internals ---------------------------------------------------

namespace {

// Piecewise-linear tangent-angle gain along a run of primitives.
struct GainWalker {
  std::vector<double> cum_len;   // breakpoints in walked distance
  std::vector<double> cum_gain;  // |angle| gained at each breakpoint

  double gain(double d) const {
    if (d <= 0.0) return 0.0;
    auto it = std::upper_bound(cum_len.begin(), cum_len.end(), d);
    size_t i = std::min(static_cast<size_t>(it - cum_len.begin()), cum_len.size() - 1);
    if (i == 0) return 0.0;
    const double l0 = cum_len[i - 1], l1 = cum_len[i];
    const double g0 = cum_gain[i - 1], g1 = cum_gain[i];
    if (d >= l1) return g1;
    return g0 + (g1 - g0) * (d - l0) / (l1 - l0);
  }
  double total_len() const { return cum_len.back(); }
};

GainWalker make_walker(const std::vector<Primitive>& prims, bool reversed) {
  GainWalker w;
  w.cum_len.push_back(0.0);
  w.cum_gain.push_back(0.0);
  const int n = static_cast<int>(prims.size());
  for (int k = 0; k < n; ++k) {
    const Primitive& p = prims[reversed ? n - 1 - k : k];
    w.cum_len.push_back(w.cum_len.back() + primitive_length(p));
    w.cum_gain.push_back(w.cum_gain.back() + std::abs(primitive_signed_sweep(p)));
  }
  return w;
}

struct SiteFrame {
  double a0 = 0.0, a1 = 0.0, b1 = 0.0, c1 = 0.0;  // extended coords of the three arcs
  std::vector<Primitive> c1_prims, b_prims, c2_prims;
};

SiteFrame make_frame(const ArcSpline& c, const Procedure1Site& site) {
  SiteFrame f;
  auto [a0, a1] = span_interval(c, site.concave_before.span);
  f.a0 = a0;
  f.a1 = a1;
  f.b1 = a1 + sub_arc_length(c, site.convex.span);
  f.c1 = f.b1 + sub_arc_length(c, site.concave_after.span);
  f.c1_prims = extract_piece(c, site.concave_before.span);
  f.b_prims = extract_piece(c, site.convex.span);
  f.c2_prims = extract_piece(c, site.concave_after.span);
  return f;
}

struct PairSolve {
  bool ok = false;
  std::string fail;  // "F1" or "F2"
  double d = 0.0;    // backward distance on the first concave arc
  double e = 0.0;    // forward distance on the convex arc
};

// Solve gb(d) = gf(eps - d) for the smallest d: parallel tangents with arc
// distance eps through p2.
PairSolve solve_parallel_pair(const GainWalker& gb, const GainWalker& gf, double eps) {
  PairSolve r;
  const double len_back = gb.total_len();
  const double len_fwd = gf.total_len();
  const double dlow = std::max(0.0, eps - len_fwd);
  const double dhigh = std::min(eps, len_back);
  if (dlow > dhigh) {
    r.fail = len_back < len_fwd ? "F1" : "F2";
    return r;
  }
  auto F = [&](double d) { return gb.gain(d) - gf.gain(eps - d); };
  if (F(dlow) > 1e-14) {
    r.fail = "F2";  // would need to run past the convex arc's end
    return r;
  }
  if (F(dhigh) < -1e-14) {
    r.fail = "F1";  // would need to run past p1
    return r;
  }
  // breakpoints in d: backward walker's own plus eps - forward walker's
  std::vector<double> bps{dlow, dhigh};
  for (double l : gb.cum_len)
    if (l > dlow && l < dhigh) bps.push_back(l);
  for (double l : gf.cum_len) {
    const double d = eps - l;
    if (d > dlow && d < dhigh) bps.push_back(d);
  }
  std::sort(bps.begin(), bps.end());
  for (size_t i = 0; i + 1 < bps.size(); ++i) {
    const double f0 = F(bps[i]);
    const double f1 = F(bps[i + 1]);
    if (f0 > 1e-14) break;          // passed the root
    if (f1 < -1e-14) continue;      // root is further on
    double d;
    if (std::abs(f1 - f0) < 1e-18) d = bps[i];  // flat and ~zero: smallest d
    else d = bps[i] + (0.0 - f0) * (bps[i + 1] - bps[i]) / (f1 - f0);
    r.ok = true;
    r.d = std::clamp(d, dlow, dhigh);
    r.e = eps - r.d;
    return r;
  }
  // numerical corner: accept an endpoint root
  if (std::abs(F(dlow)) <= 1e-12) {
    r.ok = true;
    r.d = dlow;
    r.e = eps - dlow;
    return r;
  }
  if (std::abs(F(dhigh)) <= 1e-12) {
    r.ok = true;
    r.d = dhigh;
    r.e = eps - dhigh;
    return r;
  }
  r.fail = "F1";
  return r;
}

struct TangentHit {
  bool ok = false;
  Vec2 q = Vec2::Zero();
  Vec2 p_prime = Vec2::Zero();
  double s_q = 0.0;        // extended coord of q's preimage on the convex arc
  double s_p_prime = 0.0;  // extended coord of p' on the second concave arc
};

// Sub-arc between extended coordinates, wrap decided by the span length.
SubArcRef sub_between(const ArcSpline& c, double total_len, double s0_ext, double s1_ext) {
  double s0 = std::fmod(s0_ext, total_len);
  if (s0 < 0.0) s0 += total_len;
  return make_sub_arc(c, s0, s0 + (s1_ext - s0_ext));
}

// Common tangent line between the translated convex piece and the second
// concave arc, consistent with the traversal direction on both sides.
TangentHit find_splice_tangent(const ArcSpline& c, const SiteFrame& f, double e, const Vec2& v,
                               double tol) {
  TangentHit best;
  ArcLengthTable table(c);
  // arc-only candidate lists with their extended start coordinates
  struct Cand {
    const Arc* arc;
    double s0, len;
    int skip;  // primitives skipped from the splice end
  };
  std::vector<Cand> bcands, ccands;
  {
    double s = f.a1;
    std::vector<Cand> tmp;
    for (const auto& p : f.b_prims) {
      const double len = primitive_length(p);
      if (const auto* a = std::get_if<Arc>(&p))
        tmp.push_back({a, s, len, 0});
      s += len;
    }
    for (int i = static_cast<int>(tmp.size()) - 1; i >= 0; --i) {
      Cand cand = tmp[i];
      cand.skip = static_cast<int>(tmp.size()) - 1 - i;
      if (cand.s0 + cand.len <= f.a1 + e + 1e-15) break;  // entirely cut away
      bcands.push_back(cand);
    }
  }
  {
    double s = f.b1;
    int skip = 0;
    for (const auto& p : f.c2_prims) {
      const double len = primitive_length(p);
      if (const auto* a = std::get_if<Arc>(&p)) ccands.push_back({a, s, len, skip});
      s += len;
      ++skip;
    }
  }
  int best_skip = std::numeric_limits<int>::max();
  for (const auto& bc : bcands) {
    for (const auto& cc : ccands) {
      const int skip = bc.skip + cc.skip;
      if (skip >= best_skip) continue;
      const Arc b = *bc.arc;
      const Arc& cc_arc = *cc.arc;
      const Vec2 cb = b.center + v;
      const Vec2 dvec = cc_arc.center - cb;
      const double D = dvec.norm();
      const double rsum = b.radius + cc_arc.radius;
      if (D < rsum - tol) continue;  // circles interpenetrate: no rolling tangent
      const double msin = std::min(1.0, rsum / D);
      const double alpha = angle_of(dvec);
      for (double chi : {alpha + std::asin(msin), alpha - kPi - std::asin(msin)}) {
        const Vec2 u = unit_from_angle(chi);
        const Vec2 q = cb + b.radius * unit_from_angle(chi - kPi / 2.0);
        const Vec2 pp = cc_arc.center + cc_arc.radius * unit_from_angle(chi + kPi / 2.0);
        const Vec2 w = pp - q;
        if (w.dot(u) < -tol) continue;                       // bridge must run forward
        if (std::abs(cross2(u, w)) > 1e-7 * (1.0 + w.norm())) continue;  // not actually tangent
        // q on the kept part of the convex piece
        double tq = arc_param_of_angle(b, chi - kPi / 2.0);
        if (!(tq >= -1e-12 && tq <= 1.0 + 1e-12)) continue;
        tq = std::clamp(tq, 0.0, 1.0);
        const double s_q = bc.s0 + tq * bc.len;
        if (s_q < f.a1 + e - 1e-12) continue;  // before the splice start
        // p' on the concave arc
        double tc = arc_param_of_angle(cc_arc, chi + kPi / 2.0);
        if (!(tc >= -1e-12 && tc <= 1.0 + 1e-12)) continue;
        tc = std::clamp(tc, 0.0, 1.0);
        const double s_pp = cc.s0 + tc * cc.len;
        // bridge must not cross the retained neighborhood
        Segment bridge{q, pp};
        const double blen = (pp - q).norm();
        bool crossed = false;
        if (blen > tol) {
          auto check_piece = [&](const std::vector<Primitive>& prims, const Vec2& endpoint) {
            for (const auto& pr : prims) {
              for (const auto& h : intersect_primitives(Primitive(bridge), pr, tol)) {
                if ((h.point - endpoint).norm() <= 100.0 * tol) continue;
                crossed = true;
                return;
              }
            }
          };
          // kept convex piece: from the splice start to q (translated)
          if (s_q > f.a1 + e + 1e-12) {
            auto kept_b = extract_piece(c, sub_between(c, table.total(), f.a1 + e, s_q));
            for (auto& pr : kept_b) pr = primitive_translate(pr, v);
            check_piece(kept_b, q);
          }
          if (!crossed && s_pp < f.c1 - 1e-12) {
            auto kept_c = extract_piece(c, sub_between(c, table.total(), s_pp, f.c1));
            check_piece(kept_c, pp);
          }
        }
        if (crossed) continue;
        best.ok = true;
        best.q = q;
        best.p_prime = pp;
        best.s_q = s_q;
        best.s_p_prime = s_pp;
        best_skip = skip;
      }
    }
  }
  return best;
}

struct P1Probe {
  bool ok = false;
  std::string reason;  // F1, F2, F3, not_simple, area
  ArcSpline curve;
  double e1 = 0.0, e2 = 0.0, e3 = 0.0;  // arc-length slack to F.1/F.2/F.3
};

P1Probe p1_construct(const ArcSpline& c, const SiteFrame& f, double eps, double area_before) {
  P1Probe probe;
  ArcLengthTable table(c);
  const double L = table.total();
  const double min_len = 10.0 * c.pos_tol;

  GainWalker gb = make_walker(f.c1_prims, /*reversed=*/true);
  GainWalker gf = make_walker(f.b_prims, /*reversed=*/false);
  PairSolve pair = solve_parallel_pair(gb, gf, eps);
  if (!pair.ok) {
    probe.reason = pair.fail;
    return probe;
  }
  probe.e1 = gb.total_len() - pair.d;

  const Vec2 p_eps = point_at(c, std::fmod(f.a1 - pair.d + L, L));
  const Vec2 p_star = point_at(c, std::fmod(f.a1 + pair.e, L));
  const Vec2 v = p_eps - p_star;

  TangentHit th = find_splice_tangent(c, f, pair.e, v, c.pos_tol);
  if (!th.ok) {
    probe.reason = "F3";
    return probe;
  }
  probe.e2 = th.s_q - (f.a1 + pair.e);
  probe.e3 = f.c1 - th.s_p_prime;

  // assemble the deformed curve
  std::vector<Primitive> prims;
  auto append = [&](std::vector<Primitive> piece) {
    for (auto& p : piece) prims.push_back(std::move(p));
  };
  auto piece_between = [&](double s0_ext, double s1_ext) -> std::vector<Primitive> {
    if (s1_ext - s0_ext < min_len) return {};
    return extract_piece(c, sub_between(c, L, s0_ext, s1_ext), min_len);
  };

  std::vector<Primitive> kept_b = piece_between(f.a1 + pair.e, th.s_q);
  for (auto& p : kept_b) p = primitive_translate(p, v);

  if (c.curve_class == CurveClass::C) {
    append(piece_between(0.0, f.a0));
    append(piece_between(f.a0, f.a1 - pair.d));
    append(kept_b);
    if ((th.p_prime - th.q).norm() > min_len) prims.push_back(Segment{th.q, th.p_prime});
    append(piece_between(th.s_p_prime, f.c1));
    append(piece_between(f.c1, L));
  } else {
    append(piece_between(f.c1, f.a0 + L));
    append(piece_between(f.a0, f.a1 - pair.d));
    append(kept_b);
    if ((th.p_prime - th.q).norm() > min_len) prims.push_back(Segment{th.q, th.p_prime});
    append(piece_between(th.s_p_prime, f.c1));
  }
  probe.curve = assemble(std::move(prims), c.curve_class, c.pos_tol, c.ang_tol, min_len);

  if (probe.curve.size() < 2) {
    probe.reason = "F2";
    return probe;
  }
  if (!is_simple(probe.curve)) {
    probe.reason = "not_simple";
    return probe;
  }
  const double area = signed_area(probe.curve);
  if (!(area > 0.0) || area >= area_before + 1e-12) {
    probe.reason = "area";
    return probe;
  }
  probe.ok = true;
  return probe;
}

}  // namespace

ArcSpline procedure1_step(const ArcSpline& c, const Procedure1Site& site, double eps) {
  if (eps == 0.0) return c;
  if (eps < 0.0) throw std::invalid_argument("procedure1_step: eps must be nonnegative");
  if (!(site.convex.total_curvature > 0.0 && site.convex.total_curvature <= kPi + 1e-9))
    throw std::invalid_argument("procedure1_step: middle arc sweep must lie in (0, pi]");
  SiteFrame f = make_frame(c, site);
  P1Probe p = p1_construct(c, f, eps, signed_area(c));
  if (!p.ok) throw std::runtime_error("procedure1_step: construction failed (" + p.reason + ")");
  return p.curve;
}

Procedure1Result procedure1_run(const ArcSpline& c, const Procedure1Site& site,
                                const ReductionOptions& opt) {
  SiteFrame f = make_frame(c, site);
  const double area0 = signed_area(c);
  const double scale = (f.b1 - f.a0);
  const double hard_cap = (f.a1 - f.a0) + (f.b1 - f.a1);

  auto probe = [&](double eps) { return p1_construct(c, f, eps, area0); };

  double lo = 1e-3 * scale;
  P1Probe plo = probe(lo);
  while (!plo.ok && lo > 1e-13 * scale) {
    lo *= 0.1;
    plo = probe(lo);
  }
  if (!plo.ok) throw std::runtime_error("procedure1_run: no admissible eps at this site");

  double hi = lo;
  P1Probe phi;
  while (true) {
    hi = std::min(2.0 * hi, hard_cap * (1.0 + 1e-9));
    phi = probe(hi);
    if (!phi.ok) break;
    plo = phi;
    lo = hi;
    if (hi >= hard_cap) {
      phi = probe(hard_cap * (1.0 + 1e-6) + 1e-12);
      break;
    }
  }
  const double tol = std::max(opt.eps_tol * scale, 1e-15);
  while (hi - lo > tol) {
    const double mid = 0.5 * (lo + hi);
    P1Probe pm = probe(mid);
    if (pm.ok) {
      plo = pm;
      lo = mid;
    } else {
      phi = pm;
      hi = mid;
    }
  }

  // event classification at eps-bar
  Procedure1Result res;
  res.eps_bar = lo;
  res.curve = plo.curve;
  const double thresh = std::max(100.0 * (hi - lo), 1e-7 * scale);
  std::vector<P1Event> fired;
  const double emin = std::min({plo.e1, plo.e2, plo.e3});
  if (plo.e1 <= emin + thresh) fired.push_back(P1Event::F1);
  if (plo.e2 <= emin + thresh) fired.push_back(P1Event::F2);
  if (plo.e3 <= emin + thresh) fired.push_back(P1Event::F3);
  if (emin > thresh) fired.clear();  // none of the coincidences is close
  const bool pinch_side = phi.reason == "not_simple" || phi.reason == "area";
  if (pinch_side) fired.push_back(P1Event::F4);
  if (fired.empty()) {
    // trust the invalid-side reason
    if (phi.reason == "F1") fired.push_back(P1Event::F1);
    else if (phi.reason == "F2") fired.push_back(P1Event::F2);
    else fired.push_back(P1Event::F3);
  }
  res.multi_event = fired.size() > 1;
  // F.4 wins a tie (flagged); otherwise the smallest index fires
  if (std::find(fired.begin(), fired.end(), P1Event::F4) != fired.end() && res.multi_event)
    res.event = P1Event::F4;
  else
    res.event = *std::min_element(fired.begin(), fired.end());
  return res;
}

// ---- Procedure 2 ------------------------------------------------------------

namespace {

struct P2Frame {
  double sa = 0.0;  // extended coords of the translated sub-arc
  double sb = 0.0;
  Vec2 dir = Vec2::Zero();  // translation direction (tangent at sa)
};

P2Frame make_p2_frame(const ArcSpline& c, const Procedure2Site& site) {
  auto [m0, m1] = span_interval(c, site.arc.span);
  auto prims = extract_piece(c, site.arc.span);
  GainWalker w = make_walker(prims, site.endpoint_choice == Procedure2Site::Endpoint::UseP2);
  // distance along the arc (from the anchored end) at which |gain| reaches pi
  const double total = w.cum_gain.back();
  if (total < kPi - 1e-9)
    throw std::invalid_argument("procedure2: site arc has |total curvature| < pi");
  double dist = w.total_len();
  if (total > kPi) {
    for (size_t i = 1; i < w.cum_gain.size(); ++i) {
      if (w.cum_gain[i] >= kPi - 1e-15) {
        const double g0 = w.cum_gain[i - 1], g1 = w.cum_gain[i];
        const double l0 = w.cum_len[i - 1], l1 = w.cum_len[i];
        dist = g1 > g0 ? l0 + (kPi - g0) * (l1 - l0) / (g1 - g0) : l1;
        break;
      }
    }
  }
  P2Frame f;
  if (site.endpoint_choice == Procedure2Site::Endpoint::UseP1) {
    f.sa = m0;
    f.sb = m0 + dist;
  } else {
    f.sa = m1 - dist;
    f.sb = m1;
  }
  ArcLengthTable table(c);
  f.dir = tangent_at(c, std::fmod(f.sa + table.total(), table.total()));
  return f;
}

ArcSpline p2_construct(const ArcSpline& c, const P2Frame& f, double eps) {
  ArcLengthTable table(c);
  const double L = table.total();
  const double min_len = 10.0 * c.pos_tol;
  const Vec2 v = eps * f.dir;
  const Vec2 pa = point_at(c, std::fmod(f.sa + L, L));
  const Vec2 pb = point_at(c, std::fmod(f.sb + L, L));

  auto moved = extract_piece(c, sub_between(c, L, f.sa, f.sb), min_len);
  for (auto& p : moved) p = primitive_translate(p, v);

  std::vector<Primitive> prims;
  auto append = [&](std::vector<Primitive> piece) {
    for (auto& p : piece) prims.push_back(std::move(p));
  };
  auto piece_between = [&](double s0_ext, double s1_ext) -> std::vector<Primitive> {
    if (s1_ext - s0_ext < min_len) return {};
    return extract_piece(c, sub_between(c, L, s0_ext, s1_ext), min_len);
  };
  if (c.curve_class == CurveClass::C) {
    append(piece_between(0.0, f.sa));
    if (eps > min_len) prims.push_back(Segment{pa, pa + v});
    append(moved);
    if (eps > min_len) prims.push_back(Segment{pb + v, pb});
    append(piece_between(f.sb, L));
  } else {
    append(piece_between(f.sb, f.sa + L));
    if (eps > min_len) prims.push_back(Segment{pa, pa + v});
    append(moved);
    if (eps > min_len) prims.push_back(Segment{pb + v, pb});
  }
  return assemble(std::move(prims), c.curve_class, c.pos_tol, c.ang_tol, min_len);
}

}  // namespace

ArcSpline procedure2_step(const ArcSpline& c, const Procedure2Site& site, double eps) {
  if (eps == 0.0) return c;
  if (eps < 0.0) throw std::invalid_argument("procedure2_step: eps must be nonnegative");
  return p2_construct(c, make_p2_frame(c, site), eps);
}

double procedure2_area_rate(const ArcSpline& c, const Procedure2Site& site) {
  P2Frame f = make_p2_frame(c, site);
  ArcLengthTable table(c);
  const double L = table.total();
  const Vec2 pa = point_at(c, std::fmod(f.sa + L, L));
  const Vec2 pb = point_at(c, std::fmod(f.sb + L, L));
  return std::abs(cross2(f.dir, pb - pa));
}

Procedure2Result procedure2_run(const ArcSpline& c, const Procedure2Site& site,
                                const ReductionOptions& opt) {
  P2Frame f = make_p2_frame(c, site);
  // bounding-box diagonal caps the translation before self-contact
  Vec2 lo_pt = Vec2::Constant(std::numeric_limits<double>::infinity());
  Vec2 hi_pt = -lo_pt;
  for (const auto& p : c.primitives) {
    for (double t : {0.0, 0.25, 0.5, 0.75, 1.0}) {
      const Vec2 q = primitive_point(p, t);
      lo_pt = lo_pt.cwiseMin(q);
      hi_pt = hi_pt.cwiseMax(q);
    }
  }
  const double scale = (hi_pt - lo_pt).norm();

  auto valid = [&](double eps) {
    ArcSpline cur = p2_construct(c, f, eps);
    return cur.size() >= 2 && is_simple(cur);
  };

  double lo = 1e-3 * scale;
  while (!valid(lo) && lo > 1e-13 * scale) lo *= 0.1;
  if (!valid(lo)) throw std::runtime_error("procedure2_run: no admissible eps at this site");
  double hi = lo;
  int guard = 0;
  while (valid(hi)) {
    lo = hi;
    hi *= 2.0;
    if (++guard > 60 || hi > 4.0 * scale)
      throw std::runtime_error("procedure2_run: failed to bracket the pinch");
  }
  const double tol = std::max(opt.eps_tol * scale, 1e-15);
  while (hi - lo > tol) {
    const double mid = 0.5 * (lo + hi);
    if (valid(mid)) lo = mid;
    else hi = mid;
  }
  Procedure2Result res;
  res.eps_bar = lo;
  res.curve = p2_construct(c, f, lo);
  res.pinch = find_pinch_event(res.curve);
  return res;
}

// ---- Pinch handling ----------------------------------------------------------

PinchEvent find_pinch_event(const ArcSpline& pinched, double cluster_tol) {
  ArcLengthTable table(pinched);
  const double L = table.total();
  const int n = pinched.size();

  // smallest gap between non-adjacent primitives
  double min_gap = std::numeric_limits<double>::infinity();
  std::vector<std::tuple<double, double>> contacts;
  auto adjacent = [&](int i, int j) { return j == (i + 1) % n || i == (j + 1) % n; };
  for (int pass = 0; pass < 2; ++pass) {
    const double thresh = pass == 0 ? cluster_tol : std::max(cluster_tol, 2.0 * min_gap);
    contacts.clear();
    for (int i = 0; i < n; ++i) {
      for (int j = i + 1; j < n; ++j) {
        if (adjacent(i, j)) continue;
        ClosestApproach ca = primitive_distance(pinched.primitives[i], pinched.primitives[j]);
        min_gap = std::min(min_gap, ca.distance);
        if (ca.distance > thresh) continue;
        double sa = table.start_of(i) + ca.ta * table.length_of(i);
        double sb = table.start_of(j) + ca.tb * table.length_of(j);
        contacts.emplace_back(std::min(sa, sb), std::max(sa, sb));
      }
    }
    if (!contacts.empty()) break;
    if (min_gap > 1e-5 * L) throw std::runtime_error("find_pinch_event: curve is not pinched");
  }
  std::sort(contacts.begin(), contacts.end());
  // merge clusters in (first, second) space
  std::vector<std::pair<double, double>> merged;
  const double merge_tol = std::max(10.0 * cluster_tol, 1e-7 * L);
  for (auto& [a, b] : contacts) {
    if (!merged.empty() && std::abs(merged.back().first - a) < merge_tol &&
        std::abs(merged.back().second - b) < merge_tol)
      continue;
    merged.emplace_back(a, b);
  }
  PinchEvent ev;
  ev.contacts = merged;
  ev.s1 = merged.front().first;
  ev.s1_prime = merged.front().second;
  ev.s2 = merged.front().first;
  ev.s2_prime = merged.front().second;
  for (auto& [a, b] : merged) {
    if (a < ev.s1) {
      ev.s1 = a;
      ev.s1_prime = b;
    }
    if (a > ev.s2) {
      ev.s2 = a;
      ev.s2_prime = b;
    }
  }
  // B.1 extremality: widen to the outermost partners if the pairing allows
  double max_b = -1.0, min_b = std::numeric_limits<double>::infinity();
  for (auto& [a, b] : merged) {
    max_b = std::max(max_b, b);
    min_b = std::min(min_b, b);
  }
  const Vec2 g_s1 = point_at(pinched, ev.s1);
  const Vec2 g_maxb = point_at(pinched, max_b);
  if ((g_s1 - g_maxb).norm() <= merge_tol) ev.s1_prime = max_b;
  const Vec2 g_s2 = point_at(pinched, ev.s2);
  const Vec2 g_minb = point_at(pinched, min_b);
  if ((g_s2 - g_minb).norm() <= merge_tol) ev.s2_prime = min_b;
  if (!(ev.s1 <= ev.s2 && ev.s2 < ev.s2_prime && ev.s2_prime <= ev.s1_prime))
    throw std::runtime_error("find_pinch_event: contact couples violate extremality");
  return ev;
}

namespace {

// The cusp endpoints of a split piece coincide only to within the contact
// detection band (2 * radius * pos_tol); widen the piece tolerance to match.
ArcSpline finish_cusp_piece(std::vector<Primitive> prims, const ArcSpline& parent,
                            double min_len) {
  ArcSpline g = assemble(std::move(prims), CurveClass::C, parent.pos_tol, parent.ang_tol, min_len);
  if (!g.primitives.empty()) {
    const Vec2 e = primitive_end(g.primitives.back());
    const Vec2 s = primitive_start(g.primitives.front());
    const double gap = (e - s).norm();
    if (gap < 1e-6) g.pos_tol = std::max(g.pos_tol, 2.0 * gap);
    const Vec2 t_in = primitive_tangent(g.primitives.back(), 1.0);
    const Vec2 t_out = primitive_tangent(g.primitives.front(), 0.0);
    const double mis = angle_distance(angle_of(t_out), angle_of(-t_in));
    if (mis < 1e-6) g.ang_tol = std::max(g.ang_tol, 2.0 * mis);
  }
  return g;
}

}  // namespace

std::pair<ArcSpline, ArcSpline> split_at_pinch(const ArcSpline& pinched, const PinchEvent& ev) {
  if (pinched.curve_class != CurveClass::K)
    throw std::invalid_argument("split_at_pinch: expects a class K curve");
  ArcLengthTable table(pinched);
  const double L = table.total();
  const double min_len = 10.0 * pinched.pos_tol;
  // outer piece: s1' forward (through the closure) to s1
  auto outer = extract_piece(pinched, make_sub_arc(pinched, ev.s1_prime, ev.s1 + L), min_len);
  // inner piece: s2 to s2'
  auto inner = extract_piece(pinched, make_sub_arc(pinched, ev.s2, ev.s2_prime), min_len);
  return {finish_cusp_piece(std::move(outer), pinched, min_len),
          finish_cusp_piece(std::move(inner), pinched, min_len)};
}

ArcSpline split_at_pinch_cusp(const ArcSpline& pinched, const PinchEvent& ev) {
  if (pinched.curve_class != CurveClass::C)
    throw std::invalid_argument("split_at_pinch_cusp: expects a class C curve");
  const double min_len = 10.0 * pinched.pos_tol;
  auto inner = extract_piece(pinched, make_sub_arc(pinched, ev.s2, ev.s2_prime), min_len);
  return finish_cusp_piece(std::move(inner), pinched, min_len);
}

// ---- Doubling and the certificate chain ---------------------------------------

ArcSpline double_arc_to_convex(const ArcSpline& c, const HeldArcCertificate& cert) {
  auto piece = extract_piece(c, cert.span);
  if (piece.empty()) throw std::invalid_argument("double_arc_to_convex: empty certificate span");
  const Vec2 mid = 0.5 * (cert.chord_a + cert.chord_b);
  std::vector<Primitive> prims = piece;
  for (const auto& p : piece) prims.push_back(primitive_point_reflect(p, mid));
  ArcSpline out = assemble(std::move(prims), CurveClass::K, c.pos_tol, c.ang_tol, 1e-12);
  return out;
}

InequalityCertificate certify_final(const std::vector<ArcSpline>& finals, double source_area,
                                    double source_energy, const ReductionOptions& opt) {
  if (finals.empty()) throw std::invalid_argument("certify_final: no final curves");
  InequalityCertificate cert;
  cert.source_area = source_area;
  cert.source_energy = source_energy;

  HeldArcCertificate h1, h2;
  ArcSpline o1, o2;
  if (finals.size() == 1) {
    const ArcSpline& f = finals.front();
    auto pair = find_two_disjoint_held_arcs(f, opt.grid_per_arc);
    h1 = pair.first;
    h2 = pair.second;
    o1 = double_arc_to_convex(f, h1);
    o2 = double_arc_to_convex(f, h2);
    cert.held_energy_1 = elastic_energy(assemble(extract_piece(f, h1.span), CurveClass::K));
    cert.held_energy_2 = elastic_energy(assemble(extract_piece(f, h2.span), CurveClass::K));
  } else {
    const ArcSpline& fa = finals[0];
    const ArcSpline& fb = finals[1];
    h1 = find_held_arc_cusp(fa, opt.grid_per_arc);
    h2 = find_held_arc_cusp(fb, opt.grid_per_arc);
    o1 = double_arc_to_convex(fa, h1);
    o2 = double_arc_to_convex(fb, h2);
    cert.held_energy_1 = elastic_energy(assemble(extract_piece(fa, h1.span), CurveClass::K));
    cert.held_energy_2 = elastic_energy(assemble(extract_piece(fb, h2.span), CurveClass::K));
  }
  cert.doubled_area_1 = signed_area(o1);
  cert.doubled_area_2 = signed_area(o2);

  const double rel = 1e-9;
  cert.area_bound_ok =
      cert.doubled_area_1 + cert.doubled_area_2 <= 2.0 * source_area * (1.0 + rel);
  cert.energy_bound_ok = cert.held_energy_1 + cert.held_energy_2 <= source_energy * (1.0 + rel);
  const double t1 = 1.0 / cert.held_energy_1;
  const double t2 = 1.0 / cert.held_energy_2;
  cert.chain_value = kPi * kPi * kPi / 8.0 * (t1 * t1 + t2 * t2) * (1.0 / t1 + 1.0 / t2) *
                     (1.0 / t1 + 1.0 / t2);
  const double pi3 = kPi * kPi * kPi;
  cert.chain_ok = source_area * source_energy * source_energy >= cert.chain_value * (1.0 - rel) &&
                  cert.chain_value >= pi3 * (1.0 - rel);
  return cert;
}

// ---- Driver ---------------------------------------------------------------------

namespace {

std::string describe_span(const ArcSpline& c, const SubArcRef& span) {
  auto [s0, s1] = span_interval(c, span);
  std::ostringstream os;
  os.precision(6);
  os << "[" << s0 << "," << s1 << "]";
  return os.str();
}

}  // namespace

ReductionResult reduce(const ArcSpline& c, const ReductionOptions& opt) {
  ReductionResult result;
  {
    ValidationReport rep = validate(c);
    if (!rep.valid())
      throw std::invalid_argument("reduce: input curve invalid: " + rep.summary());
  }
  struct WorkItem {
    ArcSpline curve;
    std::string branch;
  };
  std::vector<WorkItem> queue{{c, "0"}};
  int step_count = 0;
  int branch_counter = 0;

  // aggregate over live curves and finals, for the monotonicity record
  auto aggregate = [&](double& A, double& E) {
    A = 0.0;
    E = 0.0;
    for (const auto& w : queue) {
      A += signed_area(w.curve);
      E += elastic_energy(w.curve);
    }
    for (const auto& fc : result.finals) {
      A += signed_area(fc);
      E += elastic_energy(fc);
    }
  };

  while (!queue.empty()) {
    WorkItem item = std::move(queue.back());
    queue.pop_back();
    bool active = true;
    while (active) {
      if (++step_count > opt.step_budget) {
        result.trace.budget_exceeded = true;
        result.trace.diagnostic = "step budget exceeded";
        return result;
      }
      double agg_area_before, agg_energy_before;
      queue.push_back(item);  // count the current curve in the aggregate
      aggregate(agg_area_before, agg_energy_before);
      queue.pop_back();

      auto sites1 = find_procedure1_sites(item.curve, opt.band);
      bool stepped = false;
      for (const auto& site : sites1) {
        Procedure1Result r1;
        try {
          r1 = procedure1_run(item.curve, site, opt);
        } catch (const std::exception&) {
          continue;  // unusable site; try the next one
        }
        ReductionStep step;
        step.step = step_count;
        step.branch = item.branch;
        step.procedure = 1;
        step.site = describe_span(item.curve, site.convex.span);
        step.eps_bar = r1.eps_bar;
        step.event = event_name(r1.event);
        step.multi_event = r1.multi_event;
        step.area_before = agg_area_before;
        step.energy_before = agg_energy_before;
        if (r1.event == P1Event::F4) {
          PinchEvent ev = find_pinch_event(r1.curve);
          step.event = "F4";
          if (item.curve.curve_class == CurveClass::K) {
            auto [g1, g2] = split_at_pinch(r1.curve, ev);
            step.curves_after = {g1, g2};
            queue.push_back({g2, item.branch + "." + std::to_string(++branch_counter)});
            item.curve = g1;
            item.branch += "." + std::to_string(++branch_counter);
          } else {
            ArcSpline g = split_at_pinch_cusp(r1.curve, ev);
            step.curves_after = {g};
            item.curve = g;
          }
        } else {
          step.curves_after = {r1.curve};
          item.curve = r1.curve;
        }
        queue.push_back(item);
        aggregate(step.area_after, step.energy_after);
        queue.pop_back();
        result.trace.steps.push_back(std::move(step));
        stepped = true;
        break;
      }
      if (stepped) continue;

      auto sites2 = find_procedure2_sites(item.curve, opt.band);
      if (!sites2.empty()) {
        const auto& site = sites2.front();
        Procedure2Result r2 = procedure2_run(item.curve, site, opt);
        ReductionStep step;
        step.step = step_count;
        step.branch = item.branch;
        step.procedure = 2;
        step.site = describe_span(item.curve, site.arc.span);
        step.eps_bar = r2.eps_bar;
        step.event = "pinch";
        step.area_before = agg_area_before;
        step.energy_before = agg_energy_before;
        if (item.curve.curve_class == CurveClass::K) {
          auto [g1, g2] = split_at_pinch(r2.curve, r2.pinch);
          step.curves_after = {g1, g2};
          queue.push_back({g2, item.branch + "." + std::to_string(++branch_counter)});
          item.curve = g1;
          item.branch += "." + std::to_string(++branch_counter);
        } else {
          ArcSpline g = split_at_pinch_cusp(r2.curve, r2.pinch);
          step.curves_after = {g};
          item.curve = g;
        }
        queue.push_back(item);
        aggregate(step.area_after, step.energy_after);
        queue.pop_back();
        result.trace.steps.push_back(std::move(step));
        continue;
      }

      // no sites left: this curve is terminal
      ClassTag tag = classify(item.curve, opt.band);
      if (tag.tag == TerminalClass::Neither) {
        result.trace.diagnostic = "terminal curve classifies as neither K_pi nor C_pi";
        result.finals.push_back(item.curve);
        active = false;
        break;
      }
      result.finals.push_back(item.curve);
      active = false;
    }
  }
  result.ok = !result.trace.budget_exceeded && result.trace.diagnostic.empty();
  return result;
}

}  // namespace elastica
