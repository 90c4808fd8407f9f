#include "elastica/svg.hpp"

#include <fstream>
#include <sstream>

namespace elastica {

namespace {

void fmt_num(std::ostringstream& os, double v) {
  // coordinate precision 1e-9
  os.precision(12);
  os << v;
}

}  // namespace

void SvgWriter::grow_bounds(const Vec2& p) {
  lo_ = lo_.cwiseMin(p);
  hi_ = hi_.cwiseMax(p);
}

void SvgWriter::add_path(const std::vector<Primitive>& prims, const SvgStyle& style, bool closed) {
  if (prims.empty()) return;
  std::ostringstream d;
  const Vec2 start = primitive_start(prims.front());
  d << "M ";
  fmt_num(d, start.x());
  d << " ";
  fmt_num(d, start.y());
  grow_bounds(start);
  for (const auto& p : prims) {
    const Vec2 e = primitive_end(p);
    if (const auto* s = std::get_if<Segment>(&p)) {
      d << " L ";
      fmt_num(d, s->to.x());
      d << " ";
      fmt_num(d, s->to.y());
    } else {
      const auto& a = std::get<Arc>(p);
      const double sweep = arc_sweep(a);
      // split sweeps >= pi so the SVG arc flags stay unambiguous
      const int pieces = sweep > kPi ? 2 : 1;
      for (int k = 1; k <= pieces; ++k) {
        const double theta = arc_angle_at(a, static_cast<double>(k) / pieces);
        const Vec2 q = arc_point_at_angle(a, theta);
        d << " A ";
        fmt_num(d, a.radius);
        d << " ";
        fmt_num(d, a.radius);
        // y-up coordinates: ccw arcs take sweep-flag 1 under the final y-flip
        d << " 0 0 " << (a.ccw ? 0 : 1) << " ";
        fmt_num(d, q.x());
        d << " ";
        fmt_num(d, q.y());
      }
      grow_bounds(a.center + Vec2::Constant(a.radius));
      grow_bounds(a.center - Vec2::Constant(a.radius));
    }
    grow_bounds(e);
  }
  if (closed) d << " Z";
  items_.push_back({d.str(), style});
}

void SvgWriter::add_curve(const ArcSpline& c, const SvgStyle& style) {
  add_path(c.primitives, style, true);
}

void SvgWriter::add_segment(const Vec2& a, const Vec2& b, const SvgStyle& style) {
  add_path({Segment{a, b}}, style, false);
}

void SvgWriter::add_sub_arc(const ArcSpline& c, const SubArcRef& span, const SvgStyle& style) {
  add_path(extract_piece(c, span), style, false);
}

void SvgWriter::add_certificate(const ArcSpline& c, const HeldArcCertificate& cert) {
  SvgStyle held;
  held.stroke = "#c23b22";
  held.stroke_width = 1.2;
  add_sub_arc(c, cert.span, held);
  SvgStyle chord;
  chord.stroke = "#2e6f9e";
  chord.stroke_width = 0.6;
  add_segment(cert.chord_a, cert.chord_b, chord);
}

std::string SvgWriter::str() const {
  Vec2 lo = lo_, hi = hi_;
  if (!lo.allFinite() || !hi.allFinite()) {
    lo = Vec2(-1, -1);
    hi = Vec2(1, 1);
  }
  const Vec2 span = hi - lo;
  const double pad = 0.05 * std::max(span.x(), span.y());
  lo -= Vec2::Constant(pad);
  hi += Vec2::Constant(pad);
  const double w = hi.x() - lo.x();
  const double h = hi.y() - lo.y();
  std::ostringstream os;
  os.precision(12);
  os << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"800\" height=\"" << 800.0 * h / w
     << "\" viewBox=\"" << lo.x() << " " << -hi.y() << " " << w << " " << h << "\">\n";
  os << "<g transform=\"scale(1,-1)\">\n";
  for (const auto& it : items_) {
    os << "  <path d=\"" << it.path_data << "\" fill=\"" << it.style.fill << "\" stroke=\""
       << it.style.stroke << "\" stroke-width=\"" << it.style.stroke_width * w / 100.0
       << "\" stroke-linecap=\"round\"/>\n";
  }
  os << "</g>\n</svg>\n";
  return os.str();
}

void SvgWriter::write(const std::string& path) const {
  std::ofstream out(path);
  out << str();
}

void render_svg(const ArcSpline& c, const std::string& path,
                const std::vector<HeldArcCertificate>& certs) {
  SvgWriter w;
  w.add_curve(c);
  for (const auto& cert : certs) w.add_certificate(c, cert);
  w.write(path);
}

}  // namespace elastica
