#include "elastica/arc_structure.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "elastica/intersect.hpp"

namespace elastica {

namespace {

int sign_of(const Primitive& p) {
  const double k = primitive_curvature(p);
  return k > 0.0 ? 1 : (k < 0.0 ? -1 : 0);
}

SubArcRef span_of_run(const ArcSpline&, int first, int last, bool wraps) {
  return SubArcRef{{first, 0.0}, {last, 1.0}, wraps};
}

}  // namespace

std::vector<MaximalArc> decompose_maximal_arcs(const ArcSpline& c) {
  const int n = c.size();
  std::vector<MaximalArc> out;
  std::vector<int> signs(n);
  int nonzero = 0;
  for (int i = 0; i < n; ++i) {
    signs[i] = sign_of(c.primitives[i]);
    if (signs[i] != 0) ++nonzero;
  }
  if (nonzero == 0) return out;  // segment-only chain cannot be a valid curve

  auto emit = [&](int first, int last, bool wraps, int run_sign) {
    MaximalArc m;
    m.sign = run_sign > 0 ? ArcSign::Convex : ArcSign::Concave;
    m.span = span_of_run(c, first, last, wraps);
    m.total_curvature = total_curvature(c, m.span);
    // total_curvature adds the cusp jump on wrapped class C spans; runs never
    // wrap the cusp, so only class K runs may wrap.
    out.push_back(m);
  };

  if (c.curve_class == CurveClass::C) {
    // linear partition; leading segments join the first arc's run
    int i = 0;
    int run_first = 0;
    int run_sign = 0;
    for (; i < n; ++i) {
      if (signs[i] == 0) continue;
      if (run_sign == 0) {
        run_sign = signs[i];
      } else if (signs[i] != run_sign) {
        emit(run_first, i - 1, false, run_sign);
        run_first = i;
        run_sign = signs[i];
      }
    }
    emit(run_first, n - 1, false, run_sign);
    return out;
  }

  // class K: circular runs; pick a run-start joint to anchor the walk
  int anchor = -1;
  int prev_sign = 0;
  // last nonzero sign before index 0
  for (int i = n - 1; i >= 0 && prev_sign == 0; --i) prev_sign = signs[i];
  for (int i = 0; i < n; ++i) {
    if (signs[i] != 0 && signs[i] != prev_sign) {
      anchor = i;
      break;
    }
    if (signs[i] != 0) prev_sign = signs[i];
  }
  if (anchor < 0) {
    // single sign around the whole curve
    MaximalArc m;
    m.sign = prev_sign > 0 ? ArcSign::Convex : ArcSign::Concave;
    m.span = SubArcRef::full(c);
    m.total_curvature = total_curvature(c, m.span);
    out.push_back(m);
    return out;
  }
  int run_first = anchor;
  int run_sign = signs[anchor];
  for (int step = 1; step <= n; ++step) {
    const int i = (anchor + step) % n;
    if (step == n) {
      const int last = (run_first <= anchor - 1 || run_first > i) ? (anchor + n - 1) % n : anchor - 1;
      emit(run_first, last < 0 ? n - 1 : last, run_first > ((anchor + n - 1) % n), run_sign);
      break;
    }
    if (signs[i] == 0 || signs[i] == run_sign) continue;
    const int last = (i + n - 1) % n;
    emit(run_first, last, run_first > last, run_sign);
    run_first = i;
    run_sign = signs[i];
  }
  return out;
}

int oscillation_number(const ArcSpline& c) {
  int count = 0;
  for (const auto& m : decompose_maximal_arcs(c))
    if (m.sign == ArcSign::Concave) ++count;
  return count;
}

double sub_arc_length(const ArcSpline& c, const SubArcRef& sub) {
  ArcLengthTable table(c);
  const double s0 = table.to_s(sub.start);
  const double s1 = table.to_s(sub.end);
  if (!sub.wraps_closure) return s1 - s0;
  return (table.total() - s0) + s1;
}

bool span_contains(const ArcSpline& c, const SubArcRef& span, double s, double slack) {
  ArcLengthTable table(c);
  const double L = table.total();
  double s0 = table.to_s(span.start);
  double s1 = table.to_s(span.end);
  s = std::fmod(s, L);
  if (s < 0.0) s += L;
  if (!span.wraps_closure) return s >= s0 - slack && s <= s1 + slack;
  return s >= s0 - slack || s <= s1 + slack;
}

namespace {

SubArcRef sub_from_arclength(const ArcSpline& c, const ArcLengthTable& table, double s0,
                             double s1_ext) {
  // s1_ext may exceed the curve length to indicate a wrapped sub-arc
  const double L = table.total();
  SubArcRef sub;
  sub.start = table.to_point(s0);
  sub.wraps_closure = s1_ext > L + 1e-12 || s0 > s1_ext;
  double s1 = s1_ext > L ? s1_ext - L : s1_ext;
  sub.end = table.to_point(s1);
  // avoid landing exactly on the seam with t=0 on primitive 0 when we mean the end
  if (std::abs(s1 - L) < 1e-12 && !sub.wraps_closure) sub.end = {c.size() - 1, 1.0};
  return sub;
}

}  // namespace

SubArcRef make_sub_arc(const ArcSpline& c, double s0, double s1_ext) {
  ArcLengthTable table(c);
  return sub_from_arclength(c, table, s0, s1_ext);
}

std::pair<double, double> span_interval(const ArcSpline& c, const SubArcRef& span) {
  ArcLengthTable table(c);
  double s0 = table.to_s(span.start);
  double s1 = table.to_s(span.end);
  if (span.wraps_closure || s1 < s0) s1 += table.total();
  return {s0, s1};
}

std::optional<HeldArcCertificate> holds_convex_set(const ArcSpline& c, const SubArcRef& sub,
                                                   double tol) {
  // (i) convexity of the span
  auto piece = extract_piece(c, sub);
  if (piece.empty()) return std::nullopt;
  bool has_arc = false;
  for (const auto& p : piece) {
    const double k = primitive_curvature(p);
    if (k < 0.0) return std::nullopt;
    if (k > 0.0) has_arc = true;
  }
  if (!has_arc) return std::nullopt;

  // (ii) total curvature pi
  const double total = total_curvature(c, sub);
  if (std::abs(total - kPi) > tol) return std::nullopt;

  // (iii) chord inside the closure of the region
  const Vec2 a = primitive_start(piece.front());
  const Vec2 b = primitive_end(piece.back());
  const double chord_len = (b - a).norm();
  if (chord_len <= c.pos_tol) return std::nullopt;
  const Vec2 dir = (b - a) / chord_len;

  std::vector<double> cuts;
  cuts.push_back(0.0);
  cuts.push_back(chord_len);
  for (const auto& p : c.primitives) {
    for (const auto& h : intersect_line_primitive(a, dir, p, c.pos_tol)) {
      if (h.along < -c.pos_tol || h.along > chord_len + c.pos_tol) continue;
      cuts.push_back(std::clamp(h.along, 0.0, chord_len));
    }
  }
  std::sort(cuts.begin(), cuts.end());
  const double probe_tol = std::max(c.pos_tol, 1e-12 * chord_len);
  for (size_t i = 0; i + 1 < cuts.size(); ++i) {
    if (cuts[i + 1] - cuts[i] <= 2.0 * probe_tol) continue;
    const Vec2 mid = a + 0.5 * (cuts[i] + cuts[i + 1]) * dir;
    bool on_boundary = false;
    const int w = winding_number(c, mid, &on_boundary, c.pos_tol);
    if (!on_boundary && w == 0) return std::nullopt;  // chord leaves the region
  }

  HeldArcCertificate cert;
  cert.span = sub;
  cert.chord_a = a;
  cert.chord_b = b;
  cert.total_curvature = total;
  return cert;
}

double find_sharp_point(const ArcSpline& c, double s, WalkDirection dir) {
  ArcLengthTable table(c);
  const double L = table.total();
  const int n = c.size();
  const bool closed_wrap = c.curve_class == CurveClass::K;

  CurvePoint start = table.to_point(std::fmod(s, L) < 0 ? std::fmod(s, L) + L : std::fmod(s, L));
  double acc = 0.0;

  if (dir == WalkDirection::Forward) {
    int i = start.prim;
    double t = start.t;
    const double limit = closed_wrap ? 2.0 * n : static_cast<double>(n);
    for (int step = 0; step < static_cast<int>(limit) + 1; ++step) {
      const Primitive& p = c.primitives[i];
      const double sweep = primitive_signed_sweep(p) * (1.0 - t);
      if (sweep > 0.0 && acc + sweep >= kPi - 1e-15) {
        const double full = primitive_signed_sweep(p);
        const double t_hit = t + (kPi - acc) / full;
        double s_hit = table.start_of(i) + t_hit * table.length_of(i);
        return s_hit;
      }
      acc += sweep;
      // advance
      ++i;
      t = 0.0;
      if (i == n) {
        if (!closed_wrap) break;
        i = 0;
      }
      if (closed_wrap && i == start.prim && step > 0) {
        // full loop done; allow finishing the partial first primitive
        const double sweep0 = primitive_signed_sweep(c.primitives[i]) * start.t;
        if (sweep0 > 0.0 && acc + sweep0 >= kPi - 1e-15) {
          const double full = primitive_signed_sweep(c.primitives[i]);
          const double t_hit = (kPi - acc) / full;
          return table.start_of(i) + t_hit * table.length_of(i);
        }
        break;
      }
    }
    throw std::runtime_error("find_sharp_point: curvature level pi not reached");
  }

  // backward walk: accumulate sweep of pieces traversed in reverse
  int i = start.prim;
  double t = start.t;
  for (int step = 0; step < 2 * n + 2; ++step) {
    const Primitive& p = c.primitives[i];
    const double sweep = primitive_signed_sweep(p) * t;
    if (sweep > 0.0 && acc + sweep >= kPi - 1e-15) {
      const double full = primitive_signed_sweep(p);
      const double t_hit = t - (kPi - acc) / full;
      return table.start_of(i) + t_hit * table.length_of(i);
    }
    acc += sweep;
    --i;
    if (i < 0) {
      if (!closed_wrap) break;
      i = n - 1;
    }
    t = 1.0;
    if (closed_wrap && i == start.prim && step > 0) break;
  }
  throw std::runtime_error("find_sharp_point: curvature level pi not reached");
}

Vec2 find_chord_dagger(const ArcSpline& c, double s, const Vec2& target) {
  const Vec2 p = point_at(c, s);
  const double len = (target - p).norm();
  if (len <= c.pos_tol) throw std::invalid_argument("find_chord_dagger: degenerate segment");
  const Vec2 dir = (target - p) / len;
  const double end_slack = std::max(100.0 * c.pos_tol, 1e-9 * len);
  double best = std::numeric_limits<double>::infinity();
  Vec2 best_pt = Vec2::Zero();
  for (const auto& prim : c.primitives) {
    for (const auto& h : intersect_line_primitive(p, dir, prim, c.pos_tol)) {
      if (h.along < end_slack || h.along > len - end_slack) continue;
      if (h.along < best) {
        best = h.along;
        best_pt = h.point;
      }
    }
  }
  if (!std::isfinite(best)) throw std::runtime_error("find_chord_dagger: no interior crossing");
  return best_pt;
}

namespace {

struct SpanInterval {
  double s0 = 0.0;
  double s1 = 0.0;  // extended coordinate, s1 >= s0, may exceed L
};

SpanInterval interval_of(const ArcSpline&, const ArcLengthTable& table, const SubArcRef& span) {
  SpanInterval iv;
  iv.s0 = table.to_s(span.start);
  iv.s1 = table.to_s(span.end);
  if (span.wraps_closure || iv.s1 < iv.s0) iv.s1 += table.total();
  return iv;
}

bool intervals_overlap(const SpanInterval& a, const SpanInterval& b, double L, double slack) {
  // compare on the circle: shift copies of b by -L, 0, +L
  for (double shift : {-L, 0.0, L}) {
    const double b0 = b.s0 + shift, b1 = b.s1 + shift;
    if (b1 > a.s0 + slack && b0 < a.s1 - slack) return true;
  }
  return false;
}

}  // namespace

bool is_void(const ArcSpline& c, const MaximalArc& arc, int grid_per_arc,
             HeldArcCertificate* found) {
  if (arc.sign != ArcSign::Convex) throw std::invalid_argument("is_void: arc must be convex");
  ArcLengthTable table(c);
  const double L = table.total();
  SpanInterval iv = interval_of(c, table, arc.span);
  const double span_len = iv.s1 - iv.s0;
  if (arc.total_curvature < kPi - 1e-12) return true;  // no pi-sweep sub-arc at all

  // candidate starts: joints inside the span plus a uniform grid
  std::vector<double> starts;
  starts.push_back(iv.s0);
  for (int i = 0; i < c.size() + 1; ++i) {
    double sj = table.start_of(i % c.size());
    for (double shift : {0.0, L}) {
      const double sx = sj + shift;
      if (sx > iv.s0 && sx < iv.s1) starts.push_back(sx);
    }
  }
  for (int k = 1; k < grid_per_arc; ++k) starts.push_back(iv.s0 + span_len * k / grid_per_arc);
  std::sort(starts.begin(), starts.end());

  for (double sq : starts) {
    // remaining sweep from sq to the span end
    SubArcRef tail = sub_from_arclength(c, table, std::fmod(sq, L), iv.s1);
    if (sq >= iv.s1 - 1e-15) break;
    const double remaining = total_curvature(c, tail) - (tail.wraps_closure && c.curve_class == CurveClass::C ? kPi : 0.0);
    if (remaining < kPi - 1e-12) break;  // later starts have even less
    double sp;
    try {
      sp = find_sharp_point(c, std::fmod(sq, L), WalkDirection::Forward);
    } catch (const std::exception&) {
      break;
    }
    double sp_ext = sp;
    while (sp_ext < sq - 1e-12) sp_ext += L;
    SubArcRef cand = sub_from_arclength(c, table, std::fmod(sq, L), sp_ext);
    if (auto cert = holds_convex_set(c, cand)) {
      if (found) *found = *cert;
      return false;
    }
  }
  return true;
}

bool is_nested(const ArcSpline& c, const SubArcRef& inner, const SubArcRef& outer) {
  // bullet conditions: both flanking arcs convex with total curvature pi
  auto convex_pi = [&](const SubArcRef& s) {
    if (c.curve_class == CurveClass::C && s.wraps_closure) return false;  // never through the cusp
    auto piece = extract_piece(c, s);
    if (piece.empty()) return false;
    for (const auto& p : piece)
      if (primitive_curvature(p) < 0.0) return false;
    return std::abs(total_curvature(c, s) - kPi) <= 1e-9;
  };
  if (!convex_pi(inner) || !convex_pi(outer)) return false;
  // chord of the outer arc
  auto outer_piece = extract_piece(c, outer);
  const Vec2 p_prime = primitive_start(outer_piece.front());
  const Vec2 p = primitive_end(outer_piece.back());
  Segment chord{p, p_prime};
  if ((p - p_prime).norm() <= c.pos_tol) return false;
  for (const auto& prim : extract_piece(c, inner)) {
    if (!intersect_primitives(Primitive(chord), prim, c.pos_tol).empty()) return true;
  }
  return false;
}

ClassTag classify(const ArcSpline& c, double band) {
  ClassTag tag;
  auto arcs = decompose_maximal_arcs(c);
  const bool is_c = c.curve_class == CurveClass::C;
  const int n = c.size();
  for (const auto& m : arcs) {
    if (m.sign == ArcSign::Convex) {
      if (is_c) {
        const bool at_cusp = (m.span.start.prim == 0 && m.span.start.t == 0.0) ||
                             (m.span.end.prim == n - 1 && m.span.end.t == 1.0);
        if (at_cusp) continue;  // exempt
      }
      if (!(m.total_curvature > kPi + band)) tag.witnesses.push_back(m);
    } else {
      if (!(m.total_curvature > -kPi + band)) tag.witnesses.push_back(m);
    }
  }
  if (!tag.witnesses.empty()) {
    tag.tag = TerminalClass::Neither;
    return tag;
  }
  tag.tag = is_c ? TerminalClass::Cpi : TerminalClass::Kpi;
  return tag;
}

namespace {

// Collect every held sub-arc the scan can find on one maximal convex arc.
std::vector<HeldArcCertificate> collect_held(const ArcSpline& c, const MaximalArc& arc,
                                             int grid_per_arc) {
  std::vector<HeldArcCertificate> out;
  if (arc.sign != ArcSign::Convex || arc.total_curvature < kPi - 1e-12) return out;
  ArcLengthTable table(c);
  const double L = table.total();
  SpanInterval iv = interval_of(c, table, arc.span);
  const double span_len = iv.s1 - iv.s0;
  std::vector<double> starts;
  for (int k = 0; k <= grid_per_arc; ++k) starts.push_back(iv.s0 + span_len * k / (grid_per_arc + 1));
  for (int i = 0; i < c.size(); ++i) {
    for (double shift : {0.0, L}) {
      const double sx = table.start_of(i) + shift;
      if (sx > iv.s0 && sx < iv.s1) starts.push_back(sx);
    }
  }
  std::sort(starts.begin(), starts.end());
  for (double sq : starts) {
    if (sq >= iv.s1 - 1e-15) break;
    double sp;
    try {
      sp = find_sharp_point(c, std::fmod(sq, L), WalkDirection::Forward);
    } catch (const std::exception&) {
      break;
    }
    double sp_ext = sp;
    while (sp_ext < sq - 1e-12) sp_ext += L;
    if (sp_ext > iv.s1 + 1e-9) continue;  // sharp point left the arc
    SubArcRef cand = sub_from_arclength(c, table, std::fmod(sq, L), sp_ext);
    if (auto cert = holds_convex_set(c, cand)) out.push_back(*cert);
  }
  return out;
}

}  // namespace

std::pair<HeldArcCertificate, HeldArcCertificate> find_two_disjoint_held_arcs(const ArcSpline& c,
                                                                              int grid_per_arc) {
  if (classify(c).tag != TerminalClass::Kpi)
    throw std::invalid_argument("find_two_disjoint_held_arcs: curve is not in K_pi");
  ArcLengthTable table(c);
  const double L = table.total();
  auto arcs = decompose_maximal_arcs(c);
  std::vector<MaximalArc> concave, convex;
  for (auto& m : arcs) (m.sign == ArcSign::Concave ? concave : convex).push_back(m);

  auto verify_pair = [&](const HeldArcCertificate& a, const HeldArcCertificate& b)
      -> std::optional<std::pair<HeldArcCertificate, HeldArcCertificate>> {
    SpanInterval ia = interval_of(c, table, a.span);
    SpanInterval ib = interval_of(c, table, b.span);
    if (intervals_overlap(ia, ib, L, 1e-12)) return std::nullopt;
    if (!holds_convex_set(c, a.span) || !holds_convex_set(c, b.span)) return std::nullopt;
    return std::make_pair(a, b);
  };

  if (concave.empty()) {
    // convex curve: opposite pi-sweep halves from parameter 0
    const double sharp = find_sharp_point(c, 0.0, WalkDirection::Forward);
    SubArcRef first = sub_from_arclength(c, table, 0.0, sharp);
    SubArcRef second = sub_from_arclength(c, table, sharp, L);
    auto ca = holds_convex_set(c, first);
    auto cb = holds_convex_set(c, second);
    if (ca && cb)
      if (auto ok = verify_pair(*ca, *cb)) return *ok;
    // fall through to scanning on failure
  } else if (concave.size() == 1) {
    // Remark construction: pi-sweep arcs hugging the single concave arc
    SpanInterval iv = interval_of(c, table, concave.front().span);
    const double p1 = std::fmod(iv.s0, L);
    const double p2 = std::fmod(iv.s1, L);
    try {
      const double q1 = find_sharp_point(c, p1, WalkDirection::Backward);
      const double q2 = find_sharp_point(c, p2, WalkDirection::Forward);
      double p1_ext = p1;
      while (p1_ext < q1 - 1e-12) p1_ext += L;
      double q2_ext = q2;
      while (q2_ext < p2 - 1e-12) q2_ext += L;
      auto ca = holds_convex_set(c, sub_from_arclength(c, table, q1, p1_ext));
      auto cb = holds_convex_set(c, sub_from_arclength(c, table, p2, q2_ext));
      if (ca && cb)
        if (auto ok = verify_pair(*ca, *cb)) return *ok;
    } catch (const std::exception&) {
      // fall through
    }
  } else {
    // void-arc iteration: walk maximal convex arcs from the first void one
    std::sort(convex.begin(), convex.end(), [&](const MaximalArc& a, const MaximalArc& b) {
      return interval_of(c, table, a.span).s0 < interval_of(c, table, b.span).s0;
    });
    const int m = static_cast<int>(convex.size());
    int void_idx = -1;
    std::vector<std::optional<HeldArcCertificate>> first_cert(m);
    for (int i = 0; i < m; ++i) {
      HeldArcCertificate found;
      if (!is_void(c, convex[i], grid_per_arc, &found)) first_cert[i] = found;
      else if (void_idx < 0) void_idx = i;
    }
    if (void_idx < 0) {
      // every arc non-void: certificates from two distinct arcs are disjoint
      for (int i = 0; i < m; ++i)
        for (int j = i + 1; j < m; ++j)
          if (first_cert[i] && first_cert[j])
            if (auto ok = verify_pair(*first_cert[i], *first_cert[j])) return *ok;
    } else {
      // directed walk on each side of the void arc
      auto walk = [&](int start_idx, int step) -> std::optional<HeldArcCertificate> {
        int cur = start_idx;
        for (int it = 0; it < m; ++it) {
          SpanInterval iv = interval_of(c, table, convex[cur].span);
          const double endpoint = step > 0 ? std::fmod(iv.s1, L) : std::fmod(iv.s0, L);
          double s_dagger_param = -1.0;
          try {
            // the sharp point lies inside the void arc: its pi-sweep sub-arc
            // anchored at this endpoint cannot hold, so the chord is crossed
            // and the nearest crossing supplies the dagger point
            const double sharp = step > 0 ? find_sharp_point(c, endpoint, WalkDirection::Backward)
                                          : find_sharp_point(c, endpoint, WalkDirection::Forward);
            const Vec2 dagger = find_chord_dagger(c, endpoint, point_at(c, sharp));
            // curve parameter of the dagger point
            double best = std::numeric_limits<double>::infinity();
            for (int pi_ = 0; pi_ < c.size(); ++pi_) {
              double t;
              const double d = point_primitive_distance(dagger, c.primitives[pi_], &t);
              if (d < best) {
                best = d;
                s_dagger_param = table.start_of(pi_) + t * table.length_of(pi_);
              }
            }
          } catch (const std::exception&) {
            return std::nullopt;  // stall: caller falls back to scanning
          }
          const int nxt = ((cur + step) % m + m) % m;
          // does the next arc's far endpoint lie on the walked piece?
          SpanInterval ivn = interval_of(c, table, convex[nxt].span);
          const double far_end = step > 0 ? std::fmod(ivn.s1, L) : std::fmod(ivn.s0, L);
          double walk_len = step > 0 ? s_dagger_param - endpoint : endpoint - s_dagger_param;
          while (walk_len < 0.0) walk_len += L;
          double far_off = step > 0 ? far_end - endpoint : endpoint - far_end;
          while (far_off < 0.0) far_off += L;
          const bool far_inside = far_off <= walk_len;
          if (!far_inside) {
            // Case 1: pi-sweep sub-arc at the near end of the next arc holds
            const double near_end = step > 0 ? std::fmod(ivn.s0, L) : std::fmod(ivn.s1, L);
            try {
              if (step > 0) {
                const double sp = find_sharp_point(c, near_end, WalkDirection::Forward);
                double sp_ext = sp;
                while (sp_ext < near_end - 1e-12) sp_ext += L;
                if (auto cert = holds_convex_set(c, sub_from_arclength(c, table, near_end, sp_ext)))
                  return cert;
              } else {
                const double sp = find_sharp_point(c, near_end, WalkDirection::Backward);
                double ne_ext = near_end;
                while (ne_ext < sp - 1e-12) ne_ext += L;
                if (auto cert = holds_convex_set(c, sub_from_arclength(c, table, sp, ne_ext)))
                  return cert;
              }
            } catch (const std::exception&) {
            }
            return std::nullopt;
          }
          // Case 2: use the next arc if non-void, otherwise keep walking
          HeldArcCertificate found;
          if (!is_void(c, convex[nxt], grid_per_arc, &found)) return found;
          cur = nxt;
        }
        return std::nullopt;
      };
      auto side_p = walk(void_idx, +1);
      auto side_q = walk(void_idx, -1);
      if (side_p && side_q)
        if (auto ok = verify_pair(*side_p, *side_q)) return *ok;
    }
  }

  // exhaustive fallback: gather certificates from every convex arc and pick a
  // disjoint pair
  std::vector<HeldArcCertificate> all;
  for (const auto& m : arcs) {
    if (m.sign != ArcSign::Convex) continue;
    auto found = collect_held(c, m, grid_per_arc);
    all.insert(all.end(), found.begin(), found.end());
  }
  for (size_t i = 0; i < all.size(); ++i)
    for (size_t j = i + 1; j < all.size(); ++j)
      if (auto ok = verify_pair(all[i], all[j])) return *ok;
  throw std::runtime_error("find_two_disjoint_held_arcs: no disjoint held arcs found");
}

HeldArcCertificate find_held_arc_cusp(const ArcSpline& c, int grid_per_arc) {
  if (classify(c).tag != TerminalClass::Cpi)
    throw std::invalid_argument("find_held_arc_cusp: curve is not in C_pi");
  auto arcs = decompose_maximal_arcs(c);
  const int n = c.size();
  auto cusp_adjacent = [&](const MaximalArc& m) {
    return (m.span.start.prim == 0 && m.span.start.t == 0.0) ||
           (m.span.end.prim == n - 1 && m.span.end.t == 1.0);
  };
  // prefer convex arcs with sweep > pi that do not touch the cusp
  std::vector<const MaximalArc*> candidates;
  for (const auto& m : arcs)
    if (m.sign == ArcSign::Convex && m.total_curvature > kPi - 1e-12 && !cusp_adjacent(m))
      candidates.push_back(&m);
  for (const auto& m : arcs)
    if (m.sign == ArcSign::Convex && m.total_curvature > kPi - 1e-12 && cusp_adjacent(m))
      candidates.push_back(&m);
  for (const auto* m : candidates) {
    HeldArcCertificate found;
    if (!is_void(c, *m, grid_per_arc, &found)) return found;
  }
  // last resort: deep scan of every convex arc
  for (const auto& m : arcs) {
    if (m.sign != ArcSign::Convex) continue;
    auto found = collect_held(c, m, 4 * grid_per_arc);
    if (!found.empty()) return found.front();
  }
  throw std::runtime_error("find_held_arc_cusp: no held arc found");
}

LemmaTotalReport check_lemma_total(const ArcSpline& c, int grid_per_prim, double tol) {
  LemmaTotalReport rep;
  ArcLengthTable table(c);
  const double L = table.total();
  const int n = c.size();
  // running curvature integral I(s) at sample points
  std::vector<double> svals;
  for (int i = 0; i < n; ++i) {
    const double s0 = table.start_of(i);
    const double len = table.length_of(i);
    for (int k = 0; k < grid_per_prim; ++k) svals.push_back(s0 + len * k / grid_per_prim);
  }
  svals.push_back(L);
  std::sort(svals.begin(), svals.end());
  std::vector<double> ivals(svals.size());
  for (size_t i = 0; i < svals.size(); ++i) {
    CurvePoint p = table.to_point(std::min(svals[i], L * (1.0 - 1e-16)));
    double acc = 0.0;
    for (int j = 0; j < p.prim; ++j) acc += primitive_signed_sweep(c.primitives[j]);
    acc += primitive_signed_sweep(c.primitives[p.prim]) * p.t;
    if (std::abs(svals[i] - L) < 1e-15) acc = total_signed_sweep(c);
    ivals[i] = acc;
  }
  const double wrap_jump = total_signed_sweep(c) + (c.curve_class == CurveClass::C ? kPi : 0.0);
  double best = std::numeric_limits<double>::infinity();
  const size_t m = svals.size();
  for (size_t a = 0; a < m; ++a) {
    for (size_t b = 0; b < m; ++b) {
      if (a == b) continue;
      double tc;
      if (a < b) tc = ivals[b] - ivals[a];
      else tc = (ivals[b] + wrap_jump) - ivals[a];  // wrapped sub-arc (crosses the cusp for class C)
      if (tc < best) {
        best = tc;
        rep.s_begin = svals[a];
        rep.s_end = svals[b];
      }
    }
  }
  rep.min_total_curvature = best;
  rep.holds = best > -kPi + tol;
  return rep;
}

LemmaRotationReport check_lemma_rotation(const ArcSpline& c, int grid_per_prim) {
  LemmaRotationReport rep;
  ArcLengthTable table(c);
  const double L = table.total();
  const int n = c.size();
  for (int i = 0; i < n; ++i) {
    for (int k = 0; k < grid_per_prim; ++k) {
      const double sp = table.start_of(i) + table.length_of(i) * (k + 0.5) / grid_per_prim;
      ++rep.samples_checked;
      const Vec2 p = point_at(c, sp);
      const Vec2 t = tangent_at(c, sp);
      // first return of the curve to the tangent line, by curve parameter
      double first_ds = std::numeric_limits<double>::infinity();
      Vec2 q = Vec2::Zero();
      for (int j = 0; j < n; ++j) {
        for (const auto& h : intersect_line_primitive(p, t, c.primitives[j], c.pos_tol)) {
          double s_hit = table.start_of(j) + h.t * table.length_of(j);
          double ds = s_hit - sp;
          while (ds <= 1e-9 * L) ds += L;
          if (c.curve_class == CurveClass::C && s_hit < sp) continue;  // no wrap through cusp
          if (std::abs(h.along) <= 10.0 * c.pos_tol) continue;        // the point p itself
          if (ds < first_ds) {
            first_ds = ds;
            q = h.point;
          }
        }
      }
      if (!std::isfinite(first_ds)) continue;
      ++rep.returns_checked;
      // side of the arc between p and q relative to the normal
      const Vec2 mid = point_at(c, std::fmod(sp + 0.5 * first_ds, L));
      const double side = cross2(t, mid - p);
      if (side >= -c.pos_tol) continue;  // on the normal side: lemma does not apply
      if ((q - p).dot(t) < 0.0) {
        rep.violations.push_back(sp);
        rep.holds = false;
      }
    }
  }
  return rep;
}

}  // namespace elastica
