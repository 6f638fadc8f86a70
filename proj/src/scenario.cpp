#include "fillarea/scenario.hpp"

#include <chrono>
#include <cmath>
#include <sstream>

#include <json.hpp>

#include "fillarea/circle.hpp"

namespace fillarea {

namespace {

using Clock = std::chrono::steady_clock;

double ms_since(Clock::time_point start) {
  return std::chrono::duration<double, std::milli>(Clock::now() - start).count();
}

// Smallest factor that makes the surface's boundary distances dominate the
// reference ones, with 5% headroom.
double domination_scale(const BoundaryDistanceMatrix& d0,
                        const BoundaryDistanceMatrix& dM) {
  double factor = 1.0;
  for (std::size_t i = 0; i < d0.d.size(); ++i)
    for (std::size_t j = 0; j < d0.d.size(); ++j)
      if (i != j && dM.d[i][j] > 0.0)
        factor = std::max(factor, d0.d[i][j] / dM.d[i][j]);
  return factor > 1.0 ? 1.05 * factor : 1.0;
}

}  // namespace

RunReport run_scenario(const Scenario& scenario) {
  RunReport report;
  report.scenario = scenario;
  std::string stage = "generate";
  try {
    Clock::time_point t0 = Clock::now();
    GeneratorParams pm = scenario.surface.params;
    GeneratorParams pd = scenario.reference.params;
    pm.seed = scenario.seed;
    pd.seed = scenario.seed + 1;
    SurfaceMesh mesh_M = generate(scenario.surface.name, pm);
    SurfaceMesh mesh_D = generate(scenario.reference.name, pd);
    report.timings_ms.push_back({"generate", ms_since(t0)});

    if (scenario.auto_scale_surface) {
      stage = "auto-scale";
      t0 = Clock::now();
      BoundaryDistanceMatrix d0 =
          boundary_distance_matrix(mesh_D, scenario.n_samples, scenario.steiner);
      BoundaryDistanceMatrix dM =
          boundary_distance_matrix(mesh_M, scenario.n_samples, scenario.steiner);
      report.scale_applied = domination_scale(d0, dM);
      if (report.scale_applied != 1.0) mesh_M = mesh_M.scaled(report.scale_applied);
      report.timings_ms.push_back({"auto-scale", ms_since(t0)});
    }

    stage = "verify";
    t0 = Clock::now();
    int genus = mesh_M.genus();
    report.result = verify_main_inequality(mesh_M, mesh_D, scenario.n_samples,
                                           scenario.steiner, genus,
                                           scenario.tolerances);
    report.hypothesis_ok = true;
    report.timings_ms.push_back({"verify", ms_since(t0)});
  } catch (const HypothesisError& e) {
    report.hypothesis_ok = false;
    report.error = std::string("verify: ") + e.what();
  } catch (const std::exception& e) {
    report.error = stage + ": " + e.what();
  }
  return report;
}

namespace {

nlohmann::json params_to_json(const GeneratorParams& p) {
  return {{"radius", p.radius},   {"angle", p.angle},
          {"circumference", p.circumference}, {"width", p.width},
          {"side", p.side},       {"level", p.level},
          {"seed", p.seed}};
}

GeneratorParams params_from_json(const nlohmann::json& j) {
  GeneratorParams p;
  p.radius = j.value("radius", p.radius);
  p.angle = j.value("angle", p.angle);
  p.circumference = j.value("circumference", p.circumference);
  p.width = j.value("width", p.width);
  p.side = j.value("side", p.side);
  p.level = j.value("level", p.level);
  p.seed = j.value("seed", p.seed);
  return p;
}

nlohmann::json tolerances_to_json(const InequalityTolerances& t) {
  return {{"area_tol_rel", t.area_tol_rel},
          {"stokes_internal_tol", t.stokes_internal_tol},
          {"stokes_chain_tol_rel", t.stokes_chain_tol_rel},
          {"density_margin_rel", t.density_margin_rel},
          {"domination_slack_rel", t.domination_slack_rel},
          {"param_tol", t.param_tol}};
}

InequalityTolerances tolerances_from_json(const nlohmann::json& j) {
  InequalityTolerances t;
  t.area_tol_rel = j.value("area_tol_rel", t.area_tol_rel);
  t.stokes_internal_tol = j.value("stokes_internal_tol", t.stokes_internal_tol);
  t.stokes_chain_tol_rel = j.value("stokes_chain_tol_rel", t.stokes_chain_tol_rel);
  t.density_margin_rel = j.value("density_margin_rel", t.density_margin_rel);
  t.domination_slack_rel = j.value("domination_slack_rel", t.domination_slack_rel);
  t.param_tol = j.value("param_tol", t.param_tol);
  return t;
}

nlohmann::json scenario_to_json_obj(const Scenario& s) {
  return {{"name", s.name},
          {"surface", {{"name", s.surface.name}, {"params", params_to_json(s.surface.params)}}},
          {"reference", {{"name", s.reference.name}, {"params", params_to_json(s.reference.params)}}},
          {"n_samples", s.n_samples},
          {"steiner", s.steiner},
          {"auto_scale_surface", s.auto_scale_surface},
          {"tolerances", tolerances_to_json(s.tolerances)},
          {"seed", s.seed}};
}

}  // namespace

std::string scenario_to_json(const Scenario& scenario) {
  return scenario_to_json_obj(scenario).dump(2);
}

Scenario scenario_from_json(const std::string& text) {
  nlohmann::json j = nlohmann::json::parse(text);
  Scenario s;
  s.name = j.value("name", s.name);
  if (j.contains("surface")) {
    s.surface.name = j["surface"].value("name", s.surface.name);
    if (j["surface"].contains("params"))
      s.surface.params = params_from_json(j["surface"]["params"]);
  }
  if (j.contains("reference")) {
    s.reference.name = j["reference"].value("name", s.reference.name);
    if (j["reference"].contains("params"))
      s.reference.params = params_from_json(j["reference"]["params"]);
  }
  s.n_samples = j.value("n_samples", s.n_samples);
  s.steiner = j.value("steiner", s.steiner);
  s.auto_scale_surface = j.value("auto_scale_surface", s.auto_scale_surface);
  if (j.contains("tolerances"))
    s.tolerances = tolerances_from_json(j["tolerances"]);
  s.seed = j.value("seed", s.seed);
  return s;
}

std::string report_to_json(const RunReport& report, bool include_timings) {
  const MainInequalityReport& r = report.result;
  nlohmann::json j = {
      {"schema_version", report.schema_version},
      {"scenario", scenario_to_json_obj(report.scenario)},
      {"hypothesis_ok", report.hypothesis_ok},
      {"scale_applied", report.scale_applied},
      {"error", report.error},
      {"result",
       {{"n_samples", r.n_samples},
        {"steiner", r.steiner},
        {"genus", r.genus},
        {"area_M", r.area_M},
        {"area_D", r.area_D},
        {"bound", r.bound},
        {"domination_slack", r.domination_slack},
        {"integral_M", r.integral_M},
        {"integral_D", r.integral_D},
        {"integral_D_tilde", r.integral_D_tilde},
        {"boundary_side", r.boundary_side},
        {"stokes_internal_M", r.stokes_internal_M},
        {"stokes_internal_D", r.stokes_internal_D},
        {"stokes_chain", r.stokes_chain},
        {"max_half_density_M", r.max_half_density_M},
        {"max_half_density_D", r.max_half_density_D},
        {"half_density_limit_M", r.half_density_limit_M},
        {"half_density_limit_D", r.half_density_limit_D},
        {"flagged_fraction_M", r.flagged_fraction_M},
        {"flagged_fraction_D", r.flagged_fraction_D},
        {"pass_area", r.pass_area},
        {"pass_stokes", r.pass_stokes},
        {"pass_density", r.pass_density},
        {"pass", r.pass}}}};
  if (include_timings) {
    nlohmann::json t = nlohmann::json::object();
    for (const auto& [k, v] : report.timings_ms) t[k] = v;
    j["timings_ms"] = t;
  }
  return j.dump(2);
}

std::string convergence_table(const GeneratorSpec& disc,
                              const std::vector<SweepPoint>& sweep) {
  std::ostringstream csv;
  csv << "n_samples,steiner,level,area_D,tilde_integral,target,rel_error,"
         "maxform_integral,coarse_trace_gap,flagged_fraction\n";
  csv.precision(12);
  for (const SweepPoint& point : sweep) {
    GeneratorParams params = disc.params;
    params.level = point.level;
    SurfaceMesh mesh = generate(disc.name, params);

    BoundarySamples samples = boundary_samples(mesh, point.n_samples);
    std::vector<DistanceField> dist =
        sample_distance_fields(mesh, samples, point.steiner);
    BoundaryDistanceMatrix d0 = matrix_from_fields(samples, dist);
    std::vector<SpecialField> fields, tildes;
    for (int p = 0; p < point.n_samples; ++p) {
      fields.push_back(special_field(mesh, d0, p, dist));
      tildes.push_back(tilde_field(mesh, p, dist[p]));
    }

    PullbackDensity density = pullback_density(mesh, fields);
    double maxform = area_integral(density);
    double tilde = area_integral(pullback_density(mesh, tildes));
    double area = mesh.total_area();
    double target = kTau * area;
    StokesReport coarse = stokes_residual(mesh, fields, trace_from_matrix(d0));

    csv << point.n_samples << ',' << point.steiner << ',' << point.level << ','
        << area << ',' << tilde << ',' << target << ','
        << std::fabs(tilde - target) / target << ',' << maxform << ','
        << coarse.relative << ',' << flagged_area_fraction(density) << '\n';
  }
  return csv.str();
}

std::string circle_convergence_table(const std::vector<int>& ns) {
  std::ostringstream csv;
  csv << "n,sum,abs_error\n";
  csv.precision(15);
  for (int n : ns) {
    double sum = cyclic_area_sum(equally_spaced(n));
    csv << n << ',' << sum << ',' << std::fabs(sum - kPi) << '\n';
  }
  return csv.str();
}

}  // namespace fillarea
