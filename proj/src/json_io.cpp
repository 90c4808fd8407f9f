#include "elastica/json_io.hpp"

#include <fstream>
#include <nlohmann/json.hpp>
#include <stdexcept>

namespace elastica {

using nlohmann::json;

json curve_to_json(const ArcSpline& c) {
  json j;
  j["class"] = c.curve_class == CurveClass::K ? "K" : "C";
  json prims = json::array();
  for (const auto& p : c.primitives) {
    json e;
    if (const auto* s = std::get_if<Segment>(&p)) {
      e["type"] = "segment";
      e["from"] = {s->from.x(), s->from.y()};
      e["to"] = {s->to.x(), s->to.y()};
    } else {
      const auto& a = std::get<Arc>(p);
      e["type"] = "arc";
      e["center"] = {a.center.x(), a.center.y()};
      e["radius"] = a.radius;
      e["start_angle"] = a.start_angle;
      e["end_angle"] = a.end_angle;
      e["ccw"] = a.ccw;
    }
    prims.push_back(std::move(e));
  }
  j["primitives"] = std::move(prims);
  return j;
}

ArcSpline curve_from_json(const json& j) {
  ArcSpline c;
  const std::string cls = j.at("class").get<std::string>();
  if (cls == "K") c.curve_class = CurveClass::K;
  else if (cls == "C") c.curve_class = CurveClass::C;
  else throw std::invalid_argument("curve_from_json: class must be \"K\" or \"C\"");
  if (j.contains("pos_tol")) c.pos_tol = j.at("pos_tol").get<double>();
  if (j.contains("ang_tol")) c.ang_tol = j.at("ang_tol").get<double>();
  for (const auto& e : j.at("primitives")) {
    const std::string type = e.at("type").get<std::string>();
    if (type == "segment") {
      Segment s;
      s.from = Vec2(e.at("from").at(0).get<double>(), e.at("from").at(1).get<double>());
      s.to = Vec2(e.at("to").at(0).get<double>(), e.at("to").at(1).get<double>());
      c.primitives.push_back(s);
    } else if (type == "arc") {
      Arc a;
      a.center = Vec2(e.at("center").at(0).get<double>(), e.at("center").at(1).get<double>());
      a.radius = e.at("radius").get<double>();
      a.start_angle = e.at("start_angle").get<double>();
      a.end_angle = e.at("end_angle").get<double>();
      a.ccw = e.at("ccw").get<bool>();
      c.primitives.push_back(a);
    } else {
      throw std::invalid_argument("curve_from_json: unknown primitive type " + type);
    }
  }
  return c;
}

ArcSpline load_curve(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("load_curve: cannot open " + path);
  json j;
  in >> j;
  return curve_from_json(j);
}

void save_curve(const ArcSpline& c, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("save_curve: cannot open " + path);
  out << curve_to_json(c).dump(2) << "\n";
}

json metrics_to_json(const CurveMetrics& m) {
  return json{{"length", m.length},
              {"area", m.area},
              {"energy", m.energy},
              {"oscillation", m.oscillation},
              {"turning_number", m.turning_number}};
}

namespace {

json span_to_json(const ArcSpline& c, const SubArcRef& span) {
  auto [s0, s1] = span_interval(c, span);
  return json{{"start", {{"prim", span.start.prim}, {"t", span.start.t}}},
              {"end", {{"prim", span.end.prim}, {"t", span.end.t}}},
              {"wraps_closure", span.wraps_closure},
              {"s0", s0},
              {"s1", s1}};
}

}  // namespace

json maximal_arc_to_json(const ArcSpline& c, const MaximalArc& m) {
  return json{{"sign", m.sign == ArcSign::Convex ? "convex" : "concave"},
              {"total_curvature", m.total_curvature},
              {"span", span_to_json(c, m.span)}};
}

json certificate_to_json(const ArcSpline& c, const HeldArcCertificate& cert) {
  return json{{"span", span_to_json(c, cert.span)},
              {"chord", {{cert.chord_a.x(), cert.chord_a.y()}, {cert.chord_b.x(), cert.chord_b.y()}}},
              {"total_curvature", cert.total_curvature}};
}

json report_to_json(const InequalityReport& r) {
  json j{{"name", r.name},     {"lhs", r.lhs},
         {"rhs", r.rhs},       {"satisfied", r.satisfied},
         {"slack", r.slack}};
  if (r.expected_violation) j["expected_violation"] = true;
  if (!r.note.empty()) j["note"] = r.note;
  return j;
}

json class_tag_to_json(const ArcSpline& c, const ClassTag& tag) {
  json j;
  switch (tag.tag) {
    case TerminalClass::Kpi: j["tag"] = "Kpi"; break;
    case TerminalClass::Cpi: j["tag"] = "Cpi"; break;
    case TerminalClass::Neither: j["tag"] = "neither"; break;
  }
  json w = json::array();
  for (const auto& m : tag.witnesses) w.push_back(maximal_arc_to_json(c, m));
  j["witnesses"] = std::move(w);
  return j;
}

json analyze_to_json(const ArcSpline& c, double radii_tol) {
  json j;
  j["metrics"] = metrics_to_json(metrics(c));
  json arcs = json::array();
  for (const auto& m : decompose_maximal_arcs(c)) arcs.push_back(maximal_arc_to_json(c, m));
  j["maximal_arcs"] = std::move(arcs);
  j["class_tag"] = class_tag_to_json(c, classify(c));

  Radii radii = compute_radii(c, radii_tol);
  j["radii"] = json{{"inradius", radii.inradius},
                    {"outer_radius", radii.outer_radius},
                    {"tolerance", radii.tolerance}};
  json checks = json::array();
  for (const auto& r : run_all_checks(c, radii)) checks.push_back(report_to_json(r));
  j["checks"] = std::move(checks);

  // held arcs found by scanning each convex maximal arc
  json held = json::array();
  for (const auto& m : decompose_maximal_arcs(c)) {
    if (m.sign != ArcSign::Convex) continue;
    HeldArcCertificate cert;
    if (!is_void(c, m, 64, &cert)) held.push_back(certificate_to_json(c, cert));
  }
  j["held_arcs"] = std::move(held);
  return j;
}

json trace_step_to_json(const ReductionStep& step) {
  json j{{"step", step.step},
         {"branch", step.branch},
         {"procedure", step.procedure},
         {"site", step.site},
         {"eps_bar", step.eps_bar},
         {"event", step.event},
         {"area_before", step.area_before},
         {"area_after", step.area_after},
         {"energy_before", step.energy_before},
         {"energy_after", step.energy_after}};
  if (step.multi_event) j["multi_event"] = true;
  if (step.curves_after.size() == 1) {
    j["curve_after"] = curve_to_json(step.curves_after.front());
  } else {
    json arr = json::array();
    for (const auto& c : step.curves_after) arr.push_back(curve_to_json(c));
    j["curve_after"] = std::move(arr);
  }
  return j;
}

void write_trace_jsonl(const ReductionTrace& trace, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("write_trace_jsonl: cannot open " + path);
  for (const auto& step : trace.steps) out << trace_step_to_json(step).dump() << "\n";
}

json inequality_certificate_to_json(const InequalityCertificate& cert) {
  return json{{"source_area", cert.source_area},
              {"source_energy", cert.source_energy},
              {"held_energy_1", cert.held_energy_1},
              {"held_energy_2", cert.held_energy_2},
              {"doubled_area_1", cert.doubled_area_1},
              {"doubled_area_2", cert.doubled_area_2},
              {"chain_value", cert.chain_value},
              {"area_bound_ok", cert.area_bound_ok},
              {"energy_bound_ok", cert.energy_bound_ok},
              {"chain_ok", cert.chain_ok},
              {"valid", cert.valid()}};
}

}  // namespace elastica
