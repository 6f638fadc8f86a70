#pragma once

// End-to-end scenarios: generator configs in, verdicts and reports out.
// Reports echo their scenario so every run is reproducible from its own
// output; all randomness is seeded.

#include <cstdint>
#include <string>
#include <vector>

#include "fillarea/forms.hpp"
#include "fillarea/generators.hpp"

namespace fillarea {

struct GeneratorSpec {
  std::string name = "flat_disc";
  GeneratorParams params;
};

struct Scenario {
  std::string name = "scenario";
  GeneratorSpec surface;    // M
  GeneratorSpec reference;  // D
  int n_samples = 16;
  int steiner = 4;
  bool auto_scale_surface = false;  // scale M until domination holds
  InequalityTolerances tolerances;
  std::uint64_t seed = kDefaultJitterSeed;
};

struct RunReport {
  int schema_version = 1;
  Scenario scenario;
  bool hypothesis_ok = false;
  double scale_applied = 1.0;
  MainInequalityReport result;
  std::string error;  // stage-labelled message when a stage throws
  std::vector<std::pair<std::string, double>> timings_ms;

  bool pass() const { return error.empty() && hypothesis_ok && result.pass; }
};

RunReport run_scenario(const Scenario& scenario);

// JSON round-trip; `include_timings` is off for determinism comparisons.
std::string report_to_json(const RunReport& report, bool include_timings = true);
std::string scenario_to_json(const Scenario& scenario);
Scenario scenario_from_json(const std::string& text);

struct SweepPoint {
  int n_samples = 16;
  int steiner = 4;
  int level = 5;
};

// Disc-side convergence: integral of the pulled-back form against
// 2*pi*Area(D), Stokes residual, flagged-face area fraction.  CSV with a
// header row.
std::string convergence_table(const GeneratorSpec& disc,
                              const std::vector<SweepPoint>& sweep);

// |cyclic_area_sum(n equally spaced) - pi| for each n.  CSV.
std::string circle_convergence_table(const std::vector<int>& ns);

}  // namespace fillarea
