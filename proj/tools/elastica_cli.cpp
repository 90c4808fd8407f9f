// Command-line front end: analysis, reduction, batch verification, generation,
// flow runs, and SVG rendering over the JSON curve format.

#include <CLI11.hpp>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <nlohmann/json.hpp>

#include "elastica/convex_hull.hpp"
#include "elastica/flows.hpp"
#include "elastica/generators.hpp"
#include "elastica/inequalities.hpp"
#include "elastica/json_io.hpp"
#include "elastica/procedures.hpp"
#include "elastica/svg.hpp"

using namespace elastica;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitValidation = 2;
constexpr int kExitDiagnostic = 3;

// ELASTICA_POS_TOL / ELASTICA_ANG_TOL override the defaults of loaded curves.
void apply_env_tolerances(ArcSpline& c) {
  if (const char* p = std::getenv("ELASTICA_POS_TOL")) c.pos_tol = std::atof(p);
  if (const char* a = std::getenv("ELASTICA_ANG_TOL")) c.ang_tol = std::atof(a);
}

ArcSpline load_checked(const std::string& path) {
  ArcSpline c = load_curve(path);
  apply_env_tolerances(c);
  return c;
}

int cmd_analyze(const std::string& input, const std::string& report_path) {
  ArcSpline c = load_checked(input);
  ValidationReport rep = validate(c);
  if (!rep.valid()) {
    nlohmann::json j{{"valid", false}};
    nlohmann::json issues = nlohmann::json::array();
    for (const auto& i : rep.issues) issues.push_back({{"what", i.what}, {"prim", i.prim}});
    j["issues"] = std::move(issues);
    if (!report_path.empty()) std::ofstream(report_path) << j.dump(2) << "\n";
    std::cerr << "validation failed: " << rep.summary() << "\n";
    return kExitValidation;
  }
  nlohmann::json j = analyze_to_json(c);
  j["valid"] = true;
  j["curve_id"] = input;
  if (!report_path.empty()) std::ofstream(report_path) << j.dump(2) << "\n";
  else std::cout << j.dump(2) << "\n";
  return kExitOk;
}

int cmd_reduce(const std::string& input, const std::string& trace_path,
               const std::string& svg_dir, const std::string& cert_path, int budget) {
  ArcSpline c = load_checked(input);
  ValidationReport rep = validate(c);
  if (!rep.valid()) {
    std::cerr << "validation failed: " << rep.summary() << "\n";
    return kExitValidation;
  }
  ReductionOptions opt;
  opt.step_budget = budget;
  ReductionResult res = reduce(c, opt);
  if (!trace_path.empty()) write_trace_jsonl(res.trace, trace_path);
  if (!svg_dir.empty()) {
    std::filesystem::create_directories(svg_dir);
    int frame = 0;
    for (const auto& step : res.trace.steps) {
      SvgWriter w;
      for (const auto& piece : step.curves_after) w.add_curve(piece);
      char name[32];
      std::snprintf(name, sizeof name, "frame_%04d.svg", frame++);
      w.write(svg_dir + "/" + name);
    }
  }
  if (!res.ok) {
    std::cerr << "reduction diagnostic failure: "
              << (res.trace.diagnostic.empty() ? "budget" : res.trace.diagnostic) << "\n";
    return kExitDiagnostic;
  }
  InequalityCertificate cert = certify_final(res.finals, signed_area(c), elastic_energy(c), opt);
  nlohmann::json j = inequality_certificate_to_json(cert);
  j["finals"] = nlohmann::json::array();
  for (const auto& f : res.finals) j["finals"].push_back(curve_to_json(f));
  j["steps"] = res.trace.steps.size();
  if (!cert_path.empty()) std::ofstream(cert_path) << j.dump(2) << "\n";
  std::cout << "steps=" << res.trace.steps.size() << " finals=" << res.finals.size()
            << " chain=" << cert.chain_value << " valid=" << (cert.valid() ? "yes" : "no")
            << "\n";
  return cert.valid() ? kExitOk : kExitDiagnostic;
}

void csv_check_row(std::ofstream& csv, const std::string& id, const std::string& family,
                   const CurveMetrics& m, const InequalityReport& r) {
  csv << id << "," << family << "," << m.length << "," << m.area << "," << m.energy << ","
      << r.name << "," << r.lhs << "," << r.rhs << "," << (r.satisfied ? 1 : 0) << ","
      << (r.expected_violation ? 1 : 0) << "\n";
}

int cmd_verify(const std::string& family, int count, std::uint64_t seed,
               const std::string& out_csv) {
  std::ofstream csv;
  if (!out_csv.empty()) {
    csv.open(out_csv);
    csv.precision(17);
    csv << "curve_id,family,length,area,energy,check,lhs,rhs,satisfied,expected_violation\n";
  }
  int hard_violations = 0;
  auto run_checks = [&](const std::string& id, const ArcSpline& c, bool with_radii) {
    CurveMetrics m = metrics(c);
    std::vector<InequalityReport> reports{check_main(c), check_gage(c), check_fixed_length(c),
                                          deficits(c).report};
    if (with_radii) {
      Radii radii = compute_radii(c, 1e-4);
      reports.push_back(check_enomoto(c, radii));
      reports.push_back(check_bonnesen_improved(c, radii));
    }
    for (const auto& r : reports) {
      if (csv.is_open()) csv_check_row(csv, id, family, m, r);
      if (!r.satisfied && !r.expected_violation) ++hard_violations;
    }
  };

  if (family == "random") {
    for (int i = 0; i < count; ++i) {
      ArcSpline c = make_random_simple(seed + i, 1 + static_cast<int>((seed + i) % 4));
      if (!validate(c).valid()) {
        ++hard_violations;
        continue;
      }
      run_checks("random_" + std::to_string(seed + i), c, false);
    }
  } else if (family == "figure1") {
    const double E1 = elastic_energy(make_figure1_family(1));
    const double A1 = signed_area(make_figure1_family(1));
    for (int n = 1; n <= count; ++n) {
      ArcSpline g = make_figure1_family(n);
      if (std::abs(elastic_energy(g) - E1) > 1e-12) ++hard_violations;
      if (std::abs(signed_area(g) - A1) > 1e-9) ++hard_violations;
      run_checks("figure1_" + std::to_string(n), g, false);
    }
  } else if (family == "convex") {
    std::vector<std::pair<std::string, ArcSpline>> suite;
    suite.emplace_back("circle", make_circle(1.0));
    suite.emplace_back("stadium", make_stadium(1.0, 1.0));
    suite.emplace_back("rounded_square",
                       make_rounded_polygon({{0, 0}, {2, 0}, {2, 2}, {0, 2}}, 0.5));
    suite.emplace_back("biarc_ellipse", make_biarc_ellipse(2.0, 1.0, 96));
    for (auto& [name, c] : suite) run_checks(name, c, true);
  } else {
    std::cerr << "unknown family: " << family << "\n";
    return kExitUsage;
  }
  std::cout << "hard_violations=" << hard_violations << "\n";
  return hard_violations == 0 ? kExitOk : kExitDiagnostic;
}

int cmd_flow(const std::string& input, const std::string& shape, double a, double b, int points,
             const std::string& out_csv) {
  PolyCurve start;
  if (!input.empty()) {
    ArcSpline c = load_checked(input);
    ValidationReport rep = validate(c);
    if (!rep.valid()) {
      std::cerr << "validation failed: " << rep.summary() << "\n";
      return kExitValidation;
    }
    start = resample_uniform(make_poly(sample_points(c, std::max(4, points / c.size()))), points);
  } else if (shape == "circle" || shape == "ellipse") {
    start = make_poly(sample_ellipse(a, shape == "circle" ? a : b, points));
  } else if (shape == "dumbbell") {
    start = resample_uniform(make_poly(sample_points(make_bay_dumbbell({}), 48)), points);
  } else {
    std::cerr << "unknown shape: " << shape << "\n";
    return kExitUsage;
  }
  FlowResult res = csf_run(start);
  if (!out_csv.empty()) {
    std::ofstream csv(out_csv);
    csv.precision(17);
    csv << "t,length,area,energy,dLdt,bound\n";
    for (const auto& r : res.records)
      csv << r.t << "," << r.length << "," << r.area << "," << r.energy << "," << r.dL_dt << ","
          << r.bound << "\n";
  }
  std::cout << "records=" << res.records.size()
            << " bound_satisfied=" << (res.bound_satisfied ? "yes" : "no")
            << " max_area_rate_error=" << res.max_area_rate_error << "\n";
  return res.bound_satisfied && res.completed ? kExitOk : kExitDiagnostic;
}

int cmd_render(const std::string& input, const std::string& out, bool with_certs) {
  ArcSpline c = load_checked(input);
  std::vector<HeldArcCertificate> certs;
  if (with_certs) {
    for (const auto& m : decompose_maximal_arcs(c)) {
      if (m.sign != ArcSign::Convex) continue;
      HeldArcCertificate cert;
      if (!is_void(c, m, 64, &cert)) certs.push_back(cert);
    }
  }
  render_svg(c, out, certs);
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Planar arc-spline geometry: elastic energy, area, and the reduction pipeline"};
  app.require_subcommand(1);

  // analyze
  std::string in_path, report_path;
  auto* analyze = app.add_subcommand("analyze", "validate a curve and report all checks");
  analyze->add_option("input", in_path, "curve JSON")->required();
  analyze->add_option("--report", report_path, "report JSON path (stdout otherwise)");

  // reduce
  std::string red_in, trace_path, svg_dir, cert_path;
  int budget = 10000;
  auto* red = app.add_subcommand("reduce", "run the reduction and certify the final shapes");
  red->add_option("input", red_in, "curve JSON")->required();
  red->add_option("--trace", trace_path, "JSONL trace output");
  red->add_option("--svg-dir", svg_dir, "per-step SVG frames");
  red->add_option("--certificate", cert_path, "certificate JSON output");
  red->add_option("--budget", budget, "step budget");

  // verify
  std::string family = "random", out_csv;
  int count = 100;
  std::uint64_t seed = 1;
  auto* ver = app.add_subcommand("verify", "batch-verify inequalities over a family");
  ver->add_option("--family", family, "random | figure1 | convex");
  ver->add_option("--count", count, "curve count");
  ver->add_option("--seed", seed, "base seed");
  ver->add_option("--out", out_csv, "CSV output");

  // generate
  std::string gen_family, gen_out;
  double gp_radius = 1.0, gp_r = 1.0, gp_d = 1.0, gp_side = 2.0, gp_fillet = 0.5;
  double gp_a = 2.0, gp_b = 1.0;
  int gp_n = 1, gp_lobes = 5;
  std::uint64_t gp_seed = 1;
  int gp_complexity = 2;
  auto* gen = app.add_subcommand("generate", "emit a named curve as JSON");
  gen->add_option("family", gen_family,
                  "circle | stadium | rounded-square | figure1 | random | gear | dumbbell | "
                  "canyon | two-neck | rolled-hook | dented-oval | ellipse")
      ->required();
  gen->add_option("--out", gen_out, "output path")->required();
  gen->add_option("--radius", gp_radius, "circle / dented oval body radius");
  gen->add_option("--r", gp_r, "stadium cap radius");
  gen->add_option("--d", gp_d, "stadium side length");
  gen->add_option("--side", gp_side, "square side");
  gen->add_option("--fillet", gp_fillet, "fillet radius");
  gen->add_option("--n", gp_n, "figure-1 index");
  gen->add_option("--seed", gp_seed, "random seed");
  gen->add_option("--complexity", gp_complexity, "random complexity");
  gen->add_option("--lobes", gp_lobes, "gear lobes");
  gen->add_option("--a", gp_a, "ellipse semi-axis a");
  gen->add_option("--b", gp_b, "ellipse semi-axis b");

  // flow
  std::string flow_in, flow_shape = "ellipse", flow_csv;
  double fl_a = 2.0, fl_b = 1.0;
  int fl_points = 700;
  auto* flow = app.add_subcommand("flow", "discrete curve shortening flow with bound checks");
  flow->add_option("--input", flow_in, "start curve JSON (sampled)");
  flow->add_option("--shape", flow_shape, "circle | ellipse | dumbbell");
  flow->add_option("--a", fl_a, "semi-axis a");
  flow->add_option("--b", fl_b, "semi-axis b");
  flow->add_option("--points", fl_points, "sample count");
  flow->add_option("--out", flow_csv, "CSV time series");

  // render
  std::string ren_in, ren_out;
  bool ren_certs = false;
  auto* ren = app.add_subcommand("render", "render a curve to SVG");
  ren->add_option("input", ren_in, "curve JSON")->required();
  ren->add_option("--out", ren_out, "SVG path")->required();
  ren->add_flag("--certificates", ren_certs, "highlight held arcs and chords");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    if (*analyze) return cmd_analyze(in_path, report_path);
    if (*red) return cmd_reduce(red_in, trace_path, svg_dir, cert_path, budget);
    if (*ver) return cmd_verify(family, count, seed, out_csv);
    if (*gen) {
      ArcSpline c;
      if (gen_family == "circle") c = make_circle(gp_radius);
      else if (gen_family == "stadium") c = make_stadium(gp_r, gp_d);
      else if (gen_family == "rounded-square")
        c = make_rounded_polygon({{0, 0}, {gp_side, 0}, {gp_side, gp_side}, {0, gp_side}},
                                 gp_fillet);
      else if (gen_family == "figure1") c = make_figure1_family(gp_n);
      else if (gen_family == "random") c = make_random_simple(gp_seed, gp_complexity);
      else if (gen_family == "gear") c = make_gear(gp_lobes, 1.6, 2.0, 0.45);
      else if (gen_family == "dumbbell") c = make_bay_dumbbell({});
      else if (gen_family == "canyon") c = make_canyon_dumbbell();
      else if (gen_family == "two-neck") c = make_two_neck_dumbbell();
      else if (gen_family == "rolled-hook") c = make_rolled_hook();
      else if (gen_family == "dented-oval") c = make_dented_oval(gp_radius, 0.6, kPi / 2.0);
      else if (gen_family == "ellipse") c = make_biarc_ellipse(gp_a, gp_b, 96);
      else {
        std::cerr << "unknown family: " << gen_family << "\n";
        return kExitUsage;
      }
      save_curve(c, gen_out);
      return kExitOk;
    }
    if (*flow) return cmd_flow(flow_in, flow_shape, fl_a, fl_b, fl_points, flow_csv);
    if (*ren) return cmd_render(ren_in, ren_out, ren_certs);
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitValidation;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitDiagnostic;
  }
  return kExitUsage;
}
