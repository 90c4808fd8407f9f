#pragma once

#include <string>
#include <vector>

#include "elastica/arc_spline.hpp"
#include "elastica/arc_structure.hpp"

namespace elastica {

struct SvgStyle {
  std::string stroke = "#1a1a1a";
  double stroke_width = 0.75;  // percent of the view size
  std::string fill = "none";
};

// Incremental SVG document in mathematical (y-up) coordinates.
class SvgWriter {
 public:
  void add_curve(const ArcSpline& c, const SvgStyle& style = {});
  void add_segment(const Vec2& a, const Vec2& b, const SvgStyle& style);
  void add_sub_arc(const ArcSpline& c, const SubArcRef& span, const SvgStyle& style);
  void add_certificate(const ArcSpline& c, const HeldArcCertificate& cert);

  std::string str() const;
  void write(const std::string& path) const;

 private:
  struct Item {
    std::string path_data;
    SvgStyle style;
  };
  void add_path(const std::vector<Primitive>& prims, const SvgStyle& style, bool closed);
  void grow_bounds(const Vec2& p);
  std::vector<Item> items_;
  Vec2 lo_ = Vec2::Constant(std::numeric_limits<double>::infinity());
  Vec2 hi_ = Vec2::Constant(-std::numeric_limits<double>::infinity());
};

// One-call rendering of a curve (certificates optional).
void render_svg(const ArcSpline& c, const std::string& path,
                const std::vector<HeldArcCertificate>& certs = {});

}  // namespace elastica
