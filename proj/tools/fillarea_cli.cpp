// Command-line front end: mesh generation, distance fields, special fields,
// bouquets, the filling-inequality verifier, convergence sweeps, plots, and
// the brute-force circle-bound verifier.
//
// Exit codes: 0 all checks pass, 2 the domination hypothesis fails,
// 1 any other check failure or error.

#include <fstream>
#include <iostream>
#include <random>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "fillarea/bouquet.hpp"
#include "fillarea/circle.hpp"
#include "fillarea/fields.hpp"
#include "fillarea/forms.hpp"
#include "fillarea/generators.hpp"
#include "fillarea/mesh_io.hpp"
#include "fillarea/scenario.hpp"
#include "fillarea/svg.hpp"

using namespace fillarea;

namespace {

SurfaceMesh load_mesh(const std::string& mesh_path,
                      const std::string& lengths_path) {
  return read_mesh(mesh_path, lengths_path);
}

void write_out(const std::string& path, const std::string& content) {
  if (path == "-" || path.empty()) {
    std::cout << content;
    return;
  }
  write_text_file(path, content);
}

nlohmann::json grouped_config_to_json(const GroupedConfig& cfg) {
  nlohmann::json arcs = nlohmann::json::array();
  for (const auto& arc : cfg.partition.arcs)
    arcs.push_back({{"start", arc.start.theta}, {"length", arc.length}});
  nlohmann::json groups = nlohmann::json::array();
  for (const auto& group : cfg.vectors.groups) {
    nlohmann::json angles = nlohmann::json::array();
    for (const auto& a : group.angles) angles.push_back(a.theta);
    groups.push_back({{"ccw", group.ccw}, {"angles", angles}});
  }
  return {{"genus", cfg.partition.genus}, {"arcs", arcs}, {"groups", groups}};
}

GroupedConfig grouped_config_from_json(const nlohmann::json& j) {
  GroupedConfig cfg;
  cfg.partition.genus = j.at("genus").get<int>();
  for (const auto& arc : j.at("arcs"))
    cfg.partition.arcs.push_back(
        {CircleAngle(arc.at("start").get<double>()),
         arc.at("length").get<double>()});
  for (const auto& group : j.at("groups")) {
    GroupedVectors::Group g;
    g.ccw = group.at("ccw").get<bool>();
    for (const auto& a : group.at("angles"))
      g.angles.emplace_back(a.get<double>());
    cfg.vectors.groups.push_back(std::move(g));
  }
  return cfg;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"filling-inequality toolkit"};
  app.require_subcommand(1);

  // ---- gen-mesh ----
  auto* gen = app.add_subcommand("gen-mesh", "generate a test surface");
  std::string gen_name = "flat_disc";
  GeneratorParams gen_params;
  std::string gen_out = "mesh.off", gen_lengths;
  gen->add_option("--name", gen_name,
                  "flat_disc|spherical_cap|flat_annulus|torus_with_hole|"
                  "genus2_with_hole");
  gen->add_option("--level", gen_params.level, "refinement level");
  gen->add_option("--radius", gen_params.radius, "disc radius");
  gen->add_option("--angle", gen_params.angle, "cap polar angle");
  gen->add_option("--circumference", gen_params.circumference);
  gen->add_option("--width", gen_params.width);
  gen->add_option("--side", gen_params.side, "torus side length");
  gen->add_option("--seed", gen_params.seed, "jitter seed");
  gen->add_option("--out", gen_out, "OFF output path");
  gen->add_option("--lengths", gen_lengths, "JSON edge-length sidecar path");

  // ---- distances ----
  auto* dist_cmd = app.add_subcommand("distances", "distance fields/matrices");
  std::string dist_mesh, dist_lengths, dist_out = "-";
  int dist_source = -1, dist_samples = 0, dist_steiner = 0;
  dist_cmd->add_option("--mesh", dist_mesh)->required();
  dist_cmd->add_option("--mesh-lengths", dist_lengths);
  dist_cmd->add_option("--source", dist_source,
                       "source vertex for a per-vertex field");
  dist_cmd->add_option("--samples", dist_samples,
                       "emit the boundary distance matrix instead");
  dist_cmd->add_option("--steiner", dist_steiner);
  dist_cmd->add_option("--out", dist_out, "CSV output path ('-' = stdout)");

  // ---- special-field ----
  auto* field_cmd = app.add_subcommand("special-field",
                                       "special distance function on M");
  std::string field_mesh_m, field_mesh_m_lengths;
  std::string field_mesh_d, field_mesh_d_lengths;
  int field_samples = 16, field_p = 0, field_steiner = 4;
  std::string field_out = "-";
  field_cmd->add_option("--meshM", field_mesh_m)->required();
  field_cmd->add_option("--meshM-lengths", field_mesh_m_lengths);
  field_cmd->add_option("--meshD", field_mesh_d)
      ->description("reference disc (defaults to meshM)");
  field_cmd->add_option("--meshD-lengths", field_mesh_d_lengths);
  field_cmd->add_option("--samples", field_samples);
  field_cmd->add_option("--p", field_p, "basepoint sample index");
  field_cmd->add_option("--steiner", field_steiner);
  field_cmd->add_option("--out", field_out, "JSON output path");

  // ---- bouquet ----
  auto* bouquet_cmd = app.add_subcommand("bouquet", "build and certify a bouquet");
  std::string bq_mesh, bq_lengths, bq_out = "-", bq_svg;
  int bq_basepoint = -1, bq_probes = 32;
  bouquet_cmd->add_option("--mesh", bq_mesh)->required();
  bouquet_cmd->add_option("--mesh-lengths", bq_lengths);
  bouquet_cmd->add_option("--basepoint", bq_basepoint,
                          "basepoint vertex (default: suggested interior basepoint)");
  bouquet_cmd->add_option("--probes", bq_probes);
  bouquet_cmd->add_option("--out", bq_out, "JSON output path");
  bouquet_cmd->add_option("--svg", bq_svg, "optional loop plot");

  // ---- verify ----
  auto* verify_cmd = app.add_subcommand("verify", "run the filling verifier");
  std::string v_scenario, v_report = "-";
  std::string v_mesh_m, v_mesh_m_lengths, v_mesh_d, v_mesh_d_lengths;
  int v_samples = 16, v_steiner = 4, v_genus = -1;
  bool v_autoscale = false;
  verify_cmd->add_option("--scenario", v_scenario,
                         "scenario JSON (overrides the mesh options)");
  verify_cmd->add_option("--meshM", v_mesh_m);
  verify_cmd->add_option("--meshM-lengths", v_mesh_m_lengths);
  verify_cmd->add_option("--meshD", v_mesh_d);
  verify_cmd->add_option("--meshD-lengths", v_mesh_d_lengths);
  verify_cmd->add_option("--samples", v_samples);
  verify_cmd->add_option("--steiner", v_steiner);
  verify_cmd->add_option("--genus", v_genus, "expected genus of M");
  verify_cmd->add_flag("--auto-scale", v_autoscale,
                       "scale M until domination holds (scenario mode)");
  verify_cmd->add_option("--report", v_report, "report JSON path");

  // ---- converge ----
  auto* conv_cmd = app.add_subcommand("converge", "convergence tables");
  std::string conv_mode = "disc", conv_out = "-";
  int conv_level = 4, conv_steiner = 4;
  std::vector<int> conv_ns = {8, 16, 32, 64};
  conv_cmd->add_option("--mode", conv_mode, "disc|circle");
  conv_cmd->add_option("--level", conv_level);
  conv_cmd->add_option("--steiner", conv_steiner);
  conv_cmd->add_option("--n", conv_ns, "sample counts");
  conv_cmd->add_option("--out", conv_out, "CSV output path");

  // ---- plot ----
  auto* plot_cmd = app.add_subcommand("plot", "SVG plots from CSV tables");
  std::string plot_table, plot_out = "plot.svg";
  plot_cmd->add_option("--table", plot_table, "CSV with a header row")
      ->required();
  plot_cmd->add_option("--out", plot_out);

  // ---- prop-verify ----
  auto* prop_cmd = app.add_subcommand(
      "prop-verify", "brute-force verification of the grouped circle bound");
  int prop_trials = 100000;
  std::vector<int> prop_genus = {1, 2};
  std::uint64_t prop_seed = 20240809;
  std::string prop_out = "-", prop_config;
  prop_cmd->add_option("--trials", prop_trials);
  prop_cmd->add_option("--genus", prop_genus, "genus values to draw from");
  prop_cmd->add_option("--seed", prop_seed);
  prop_cmd->add_option("--config", prop_config,
                       "replay a single JSON configuration instead");
  prop_cmd->add_option("--out", prop_out, "CSV output path");

  CLI11_PARSE(app, argc, argv);

  try {
    if (*gen) {
      SurfaceMesh mesh = generate(gen_name, gen_params);
      write_mesh(mesh, gen_out, gen_lengths);
      MeshDiagnostics d = mesh.validate();
      std::cerr << "wrote " << gen_out << ": V=" << d.vertices
                << " E=" << d.edges << " F=" << d.faces << " chi=" << d.euler
                << " b=" << d.boundary_components << " area=" << mesh.total_area()
                << "\n";
      return d.ok ? 0 : 1;
    }

    if (*dist_cmd) {
      SurfaceMesh mesh = load_mesh(dist_mesh, dist_lengths);
      std::ostringstream csv;
      csv.precision(12);
      if (dist_samples > 0) {
        BoundaryDistanceMatrix mat =
            boundary_distance_matrix(mesh, dist_samples, dist_steiner);
        csv << "param";
        for (double p : mat.params) csv << ',' << p;
        csv << '\n';
        for (std::size_t i = 0; i < mat.d.size(); ++i) {
          csv << mat.params[i];
          for (double v : mat.d[i]) csv << ',' << v;
          csv << '\n';
        }
      } else {
        if (dist_source < 0)
          throw std::invalid_argument("need --source or --samples");
        DistanceField field = distance_field(mesh, dist_source, dist_steiner);
        csv << "vertex,distance\n";
        for (int v = 0; v < mesh.vertex_count(); ++v)
          csv << v << ',' << field.dist[v] << '\n';
      }
      write_out(dist_out, csv.str());
      return 0;
    }

    if (*field_cmd) {
      SurfaceMesh mesh_m = load_mesh(field_mesh_m, field_mesh_m_lengths);
      SurfaceMesh mesh_d = field_mesh_d.empty()
                               ? mesh_m
                               : load_mesh(field_mesh_d, field_mesh_d_lengths);
      BoundarySamples samples_m = boundary_samples(mesh_m, field_samples);
      BoundarySamples samples_d = boundary_samples(mesh_d, field_samples);
      std::vector<DistanceField> dist_m =
          sample_distance_fields(mesh_m, samples_m, field_steiner);
      std::vector<DistanceField> dist_d =
          field_mesh_d.empty()
              ? dist_m
              : sample_distance_fields(mesh_d, samples_d, field_steiner);
      BoundaryDistanceMatrix d0 = matrix_from_fields(samples_d, dist_d);
      SpecialField field = special_field(mesh_m, d0, field_p, dist_m);

      nlohmann::json j;
      j["p"] = field.p_index;
      j["p_param"] = d0.params[field.p_index];
      j["values"] = field.values;
      j["argmax"] = field.argmax;
      nlohmann::json grads = nlohmann::json::array();
      for (std::size_t v = 0; v < field.grad_dir.size(); ++v)
        grads.push_back(field.grad_defined[v]
                            ? nlohmann::json(field.grad_dir[v])
                            : nlohmann::json());
      j["grad"] = grads;
      write_out(field_out, j.dump(2) + "\n");
      return 0;
    }

    if (*bouquet_cmd) {
      SurfaceMesh mesh = load_mesh(bq_mesh, bq_lengths);
      int basepoint =
          bq_basepoint >= 0 ? bq_basepoint : suggested_basepoint(mesh);
      Bouquet bouquet = build_bouquet(mesh, basepoint);
      BouquetCertificate cert = verify_bouquet(mesh, bouquet, bq_probes);

      nlohmann::json j;
      j["basepoint"] = bouquet.basepoint;
      nlohmann::json loops = nlohmann::json::array();
      for (const VertexPath& loop : bouquet.loops)
        loops.push_back({{"vertices", loop.vertices}, {"length", loop.length}});
      j["loops"] = loops;
      nlohmann::json audits = nlohmann::json::array();
      for (const StageAudit& a : bouquet.cut_log)
        audits.push_back({{"stage", a.stage},
                          {"loop_step", a.loop_step},
                          {"euler", a.euler},
                          {"boundary_components", a.boundary_components},
                          {"genus", a.genus},
                          {"area", a.area}});
      j["stages"] = audits;
      j["certificate"] = {{"annulus_ok", cert.annulus_ok},
                          {"disjoint_ok", cert.disjoint_ok},
                          {"probes_ok", cert.probes_ok},
                          {"probes_total", cert.probes_total},
                          {"probes_failed", cert.probes_failed},
                          {"pass", cert.pass}};
      write_out(bq_out, j.dump(2) + "\n");
      if (!bq_svg.empty())
        write_text_file(bq_svg, svg_bouquet_plot(mesh, bouquet));
      return cert.pass ? 0 : 1;
    }

    if (*verify_cmd) {
      RunReport report;
      if (!v_scenario.empty()) {
        std::ifstream in(v_scenario);
        if (!in) throw std::runtime_error("cannot read " + v_scenario);
        std::stringstream buffer;
        buffer << in.rdbuf();
        report = run_scenario(scenario_from_json(buffer.str()));
      } else if (!v_mesh_m.empty() && !v_mesh_d.empty()) {
        SurfaceMesh mesh_m = load_mesh(v_mesh_m, v_mesh_m_lengths);
        SurfaceMesh mesh_d = load_mesh(v_mesh_d, v_mesh_d_lengths);
        int genus = v_genus >= 0 ? v_genus : mesh_m.genus();
        report.scenario.name = "cli-meshes";
        try {
          report.result =
              verify_main_inequality(mesh_m, mesh_d, v_samples, v_steiner, genus);
          report.hypothesis_ok = true;
        } catch (const HypothesisError& e) {
          report.hypothesis_ok = false;
          report.error = std::string("verify: ") + e.what();
        }
      } else {
        throw std::invalid_argument("need --scenario or --meshM/--meshD");
      }
      write_out(v_report, report_to_json(report) + "\n");
      if (!report.hypothesis_ok) return 2;
      return report.pass() ? 0 : 1;
    }

    if (*conv_cmd) {
      std::string csv;
      if (conv_mode == "circle") {
        std::vector<int> ns = conv_ns;
        csv = circle_convergence_table(ns);
      } else {
        GeneratorSpec disc;
        disc.name = "flat_disc";
        disc.params.level = conv_level;
        std::vector<SweepPoint> sweep;
        for (int n : conv_ns) sweep.push_back({n, conv_steiner, conv_level});
        csv = convergence_table(disc, sweep);
      }
      write_out(conv_out, csv);
      return 0;
    }

    if (*plot_cmd) {
      std::ifstream in(plot_table);
      if (!in) throw std::runtime_error("cannot read " + plot_table);
      std::string line;
      std::vector<std::string> columns;
      std::vector<std::vector<double>> rows;
      bool first = true;
      while (std::getline(in, line)) {
        if (line.empty()) continue;
        std::stringstream ss(line);
        std::string cell;
        std::vector<std::string> cells;
        while (std::getline(ss, cell, ',')) cells.push_back(cell);
        if (first) {
          columns.assign(cells.begin(), cells.end());
          first = false;
          continue;
        }
        std::vector<double> row;
        for (const std::string& c : cells) row.push_back(std::stod(c));
        rows.push_back(row);
      }
      write_text_file(plot_out, svg_convergence_plot(columns, rows));
      return 0;
    }

    if (*prop_cmd) {
      std::ostringstream csv;
      csv.precision(12);
      csv << "trial,genus,sum,bound,slack,pass,groups_pass\n";
      bool all_pass = true;
      if (!prop_config.empty()) {
        std::ifstream in(prop_config);
        if (!in) throw std::runtime_error("cannot read " + prop_config);
        nlohmann::json j;
        in >> j;
        GroupedConfig cfg = grouped_config_from_json(j);
        GroupedBoundReport r = verify_grouped_bound(cfg.partition, cfg.vectors);
        csv << 0 << ',' << cfg.partition.genus << ',' << r.sum << ',' << r.bound
            << ',' << r.slack << ',' << r.pass << ',' << r.groups_pass << '\n';
        all_pass = r.pass && r.groups_pass;
      } else {
        std::mt19937_64 rng(prop_seed);
        for (int trial = 0; trial < prop_trials; ++trial) {
          int genus = prop_genus[rng() % prop_genus.size()];
          GroupedConfig cfg = random_grouped_config(rng, genus);
          GroupedBoundReport r =
              verify_grouped_bound(cfg.partition, cfg.vectors);
          csv << trial << ',' << genus << ',' << r.sum << ',' << r.bound << ','
              << r.slack << ',' << r.pass << ',' << r.groups_pass << '\n';
          if (!r.pass || !r.groups_pass) {
            all_pass = false;
            std::cerr << "violation at trial " << trial << ":\n"
                      << grouped_config_to_json(cfg).dump(2) << "\n";
          }
        }
      }
      write_out(prop_out, csv.str());
      return all_pass ? 0 : 1;
    }
  } catch (const HypothesisError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
