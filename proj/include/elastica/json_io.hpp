#pragma once

#include <nlohmann/json_fwd.hpp>
#include <string>

#include "elastica/arc_spline.hpp"
#include "elastica/arc_structure.hpp"
#include "elastica/inequalities.hpp"
#include "elastica/procedures.hpp"

namespace elastica {

// Wire format:
// {"class":"K"|"C","primitives":[{"type":"segment","from":[x,y],"to":[x,y]} |
//  {"type":"arc","center":[x,y],"radius":r,"start_angle":a0,"end_angle":a1,"ccw":b}]}
nlohmann::json curve_to_json(const ArcSpline& c);
ArcSpline curve_from_json(const nlohmann::json& j);

ArcSpline load_curve(const std::string& path);
void save_curve(const ArcSpline& c, const std::string& path);

nlohmann::json metrics_to_json(const CurveMetrics& m);
nlohmann::json maximal_arc_to_json(const ArcSpline& c, const MaximalArc& m);
nlohmann::json certificate_to_json(const ArcSpline& c, const HeldArcCertificate& cert);
nlohmann::json report_to_json(const InequalityReport& r);
nlohmann::json class_tag_to_json(const ArcSpline& c, const ClassTag& tag);

// Full analysis report: metrics, maximal_arcs, class_tag, held_arcs, checks.
nlohmann::json analyze_to_json(const ArcSpline& c, double radii_tol = 1e-4);

// One trace step as a JSONL record: {step, branch, procedure, site, eps_bar,
// event, area_before, area_after, energy_before, energy_after, curve_after}.
nlohmann::json trace_step_to_json(const ReductionStep& step);
void write_trace_jsonl(const ReductionTrace& trace, const std::string& path);

nlohmann::json inequality_certificate_to_json(const InequalityCertificate& cert);

}  // namespace elastica
