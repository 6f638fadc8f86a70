// Acceptance suite: one line per criterion, nonzero exit on any failure.
//
// Each check pins its tolerance in code next to the assertion.  Scenario
// sizes (refinement levels, steiner counts) are fixed here so the suite is
// deterministic and reproducible.

#include <chrono>
#include <cmath>
#include <cstdarg>
#include <cstdio>
#include <random>
#include <vector>

#include "fillarea/bouquet.hpp"
#include "fillarea/circle.hpp"
#include "fillarea/fields.hpp"
#include "fillarea/forms.hpp"
#include "fillarea/generators.hpp"
#include "fillarea/geodesics.hpp"
#include "../tests/oracles.hpp"

using namespace fillarea;

namespace {

int failures = 0;

struct Timer {
  std::chrono::steady_clock::time_point start =
      std::chrono::steady_clock::now();
  double seconds() const {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() -
                                         start)
        .count();
  }
};

void report(const char* id, bool pass, double seconds, double budget,
            const std::string& detail) {
  bool on_time = seconds < budget;
  if (!pass || !on_time) ++failures;
  std::printf("%-4s %s  (%.2fs/%.0fs)  %s\n", id,
              pass && on_time ? "PASS" : "FAIL", seconds, budget,
              detail.c_str());
  std::fflush(stdout);
}

std::string fmt(const char* format, ...) {
  char buffer[512];
  va_list args;
  va_start(args, format);
  std::vsnprintf(buffer, sizeof(buffer), format, args);
  va_end(args);
  return buffer;
}

struct SurfaceData {
  SurfaceMesh mesh;
  BoundarySamples samples;
  std::vector<DistanceField> dist;
  BoundaryDistanceMatrix d0;
  std::vector<SpecialField> fields;
};

SurfaceData self_pipeline(SurfaceMesh mesh, int n_samples, int steiner) {
  SurfaceData s{std::move(mesh), {}, {}, {}, {}};
  s.samples = boundary_samples(s.mesh, n_samples);
  s.dist = sample_distance_fields(s.mesh, s.samples, steiner);
  s.d0 = matrix_from_fields(s.samples, s.dist);
  for (int p = 0; p < n_samples; ++p)
    s.fields.push_back(special_field(s.mesh, s.d0, p, s.dist));
  return s;
}

// --- AC1: oriented-area bound and case-analysis agreement ---------------
void ac1() {
  Timer timer;
  std::mt19937_64 rng(101);
  std::uniform_real_distribution<double> draw(0.0, kTau);
  bool bound_ok = true;
  for (int i = 0; i < 1000000; ++i) {
    double area = oriented_area(CircleAngle(draw(rng)), CircleAngle(draw(rng)));
    if (!(std::fabs(area) <= 0.5)) bound_ok = false;
  }
  bool oracle_ok = true;
  double worst = 0.0;
  for (int i = 0; i < 10000; ++i) {
    double a = draw(rng), b = draw(rng);
    double gap = std::fabs(oriented_area(CircleAngle(a), CircleAngle(b)) -
                           oracles::oriented_area_cases(a, b));
    worst = std::max(worst, gap);
    if (gap > 1e-12) oracle_ok = false;
  }
  report("AC1", bound_ok && oracle_ok, timer.seconds(), 5.0,
         fmt("|area|<=1/2 on 1e6 pairs; oracle agreement worst gap %.2e",
             worst));
}

// --- AC2: Riemann sum to pi ---------------------------------------------
void ac2() {
  Timer timer;
  double sum = cyclic_area_sum(equally_spaced(10000));
  double err = std::fabs(sum - kPi);
  report("AC2", err < 1e-3, timer.seconds(), 1.0,
         fmt("n=1e4 equally spaced: |sum - pi| = %.3e", err));
}

// --- AC3: randomized grouped-arc bound ----------------------------------
void ac3() {
  Timer timer;
  std::mt19937_64 rng(20240809);
  bool all_pass = true;
  double worst_slack = 1e300;
  for (int trial = 0; trial < 100000; ++trial) {
    int genus = 1 + static_cast<int>(rng() % 2);
    GroupedConfig cfg = random_grouped_config(rng, genus);
    GroupedBoundReport r = verify_grouped_bound(cfg.partition, cfg.vectors);
    worst_slack = std::min(worst_slack, r.slack);
    if (!r.pass || !r.groups_pass) all_pass = false;
  }
  report("AC3", all_pass, timer.seconds(), 30.0,
         fmt("1e5 configurations, G in {1,2}; min slack %.4f", worst_slack));
}

// --- AC4: special-field laws on the flat disc ---------------------------
void ac4() {
  Timer timer;
  SurfaceData s = self_pipeline(flat_disc(1.0, 5), 16, 6);

  // Boundary identity within 2% of the local distance scale.
  double identity_worst = 0.0;
  for (int p = 0; p < 16; ++p)
    for (int j = 0; j < 16; ++j) {
      double got = s.fields[p].values[s.samples.vertices[j]];
      identity_worst =
          std::max(identity_worst, std::fabs(got - s.d0.d[p][j]));
    }
  bool identity_ok = identity_worst <= 0.02 * 2.0;  // diameter 2

  // Nonexpansion over the edge-graph metric on 1e4 vertex pairs.
  std::mt19937_64 rng(404);
  bool nonexpansion_ok = true;
  int pairs = 0;
  while (pairs < 10000) {
    int a = static_cast<int>(rng() % s.mesh.vertex_count());
    DistanceField from_a = distance_field(s.mesh, a, 0);
    for (int k = 0; k < 500 && pairs < 10000; ++k, ++pairs) {
      int b = static_cast<int>(rng() % s.mesh.vertex_count());
      for (int p = 0; p < 16; ++p) {
        double gap = std::fabs(s.fields[p].values[a] - s.fields[p].values[b]);
        if (gap > from_a.dist[b] + 1e-9) nonexpansion_ok = false;
      }
    }
  }

  // The disc shortcut field matches Euclidean distances within 2%.
  SpecialField tilde = tilde_field(s.mesh, 0, s.samples, 6);
  const Vec3& p_pos = s.mesh.positions()[s.samples.vertices[0]];
  double tilde_worst_rel = 0.0;
  bool tilde_ok = true;
  for (int v = 0; v < s.mesh.vertex_count(); ++v) {
    double euclid = std::hypot(s.mesh.positions()[v][0] - p_pos[0],
                               s.mesh.positions()[v][1] - p_pos[1]);
    double gap = std::fabs(tilde.values[v] - euclid);
    if (euclid < 0.1) {
      if (gap > 0.002) tilde_ok = false;
    } else {
      tilde_worst_rel = std::max(tilde_worst_rel, gap / euclid);
      if (gap / euclid > 0.02) tilde_ok = false;
    }
  }

  report("AC4", identity_ok && nonexpansion_ok && tilde_ok, timer.seconds(),
         60.0,
         fmt("boundary identity worst %.3e; nonexpansion %s; tilde rel %.4f",
             identity_worst, nonexpansion_ok ? "ok" : "VIOLATED",
             tilde_worst_rel));
}

// --- AC5: cyclic order of maximizers ------------------------------------
void ac5() {
  Timer timer;
  bool all_ok = true;
  int degenerate = 0, decided = 0;
  std::mt19937_64 rng(505);
  for (const char* which : {"disc", "cap"}) {
    SurfaceData s = self_pipeline(std::string(which) == std::string("disc")
                                      ? flat_disc(1.0, 5)
                                      : spherical_cap(kPi / 2, 5),
                                  8, 4);
    for (int k = 0; k < 20; ++k) {
      int x;
      do {
        x = static_cast<int>(rng() % s.mesh.vertex_count());
      } while (s.mesh.is_boundary_vertex(x));
      OrderCheck result = check_order_of_maxima(s.d0, s.fields, x);
      if (result == OrderCheck::kDegenerate) {
        ++degenerate;
        continue;
      }
      ++decided;
      if (result != OrderCheck::kCounterclockwise) all_ok = false;
    }
  }
  report("AC5", all_ok && decided > 0, timer.seconds(), 60.0,
         fmt("40 basepoints on disc+hemisphere: %d ordered, %d degenerate",
             decided, degenerate));
}

// --- AC6: Stokes consistency, shrinking under refinement ----------------
void ac6() {
  Timer timer;
  double internal_worst[2], chain[2];
  for (int i = 0; i < 2; ++i) {
    int level = 5 + i;
    MainInequalityReport r = verify_main_inequality(
        spherical_cap(kPi / 2, level), flat_disc(1.0, level), 16, 6, 0);
    internal_worst[i] = std::max(r.stokes_internal_M, r.stokes_internal_D);
    chain[i] = r.stokes_chain;
  }
  // Per-surface Stokes residuals (area integral vs its own boundary
  // restriction) must be exact to roundoff; the cross-surface chain must be
  // within 3% and strictly shrink from level 5 to 6.
  bool internal_ok = internal_worst[0] <= 1e-9 && internal_worst[1] <= 1e-9;
  bool within = chain[0] <= 0.03;
  bool shrink = chain[1] < chain[0];
  report("AC6", internal_ok && within && shrink, timer.seconds(), 300.0,
         fmt("internal %.1e/%.1e; chain %.5f -> %.5f (level 5 -> 6)",
             internal_worst[0], internal_worst[1], chain[0], chain[1]));
}

// --- AC7: disc-side integral to 2 pi Area -------------------------------
void ac7() {
  Timer timer;
  SurfaceMesh disc = flat_disc(1.0, 5);
  double target = kTau * disc.total_area();
  std::vector<double> errors;
  for (int n : {8, 16, 32, 64}) {
    BoundarySamples samples = boundary_samples(disc, n);
    std::vector<DistanceField> dist = sample_distance_fields(disc, samples, 4);
    std::vector<SpecialField> tildes;
    for (int p = 0; p < n; ++p) tildes.push_back(tilde_field(disc, p, dist[p]));
    double integral = area_integral(pullback_density(disc, tildes));
    errors.push_back(std::fabs(integral - target) / target);
  }
  bool final_ok = errors.back() < 0.05;
  bool monotone = true;
  for (std::size_t i = 1; i < errors.size(); ++i)
    if (errors[i] >= errors[i - 1]) monotone = false;
  report("AC7", final_ok && monotone, timer.seconds(), 300.0,
         fmt("relative errors %.4f %.4f %.4f %.4f (target 2*pi*area)",
             errors[0], errors[1], errors[2], errors[3]));
}

// --- AC8: main inequality scenarios -------------------------------------
void ac8() {
  Timer timer;
  std::string detail;
  bool ok = true;

  {  // (a) hemisphere filling of the flat disc
    MainInequalityReport r = verify_main_inequality(
        spherical_cap(kPi / 2, 5), flat_disc(1.0, 5), 16, 6, 0);
    bool pass = r.pass && std::fabs(r.area_D - kPi) < 0.02 * kPi &&
                std::fabs(r.bound - kTau) < 0.02 * kTau;
    ok = ok && pass;
    detail += fmt("(a)%s areaD=%.4f bound=%.4f ", pass ? "+" : "-", r.area_D,
                  r.bound);
  }
  {  // (b) identity filling: equality within 2%
    SurfaceMesh disc = flat_disc(1.0, 5);
    MainInequalityReport r = verify_main_inequality(disc, disc, 16, 6, 0);
    bool pass = r.pass && std::fabs(r.area_D - r.bound) <= 0.02 * r.bound;
    ok = ok && pass;
    detail += fmt("(b)%s gap=%.2e ", pass ? "+" : "-",
                  std::fabs(r.area_D - r.bound));
  }
  {  // (c) scaled torus filling, genus 1
    SurfaceMesh torus = torus_with_hole(4.0, 1);
    SurfaceMesh disc = flat_disc(1.0, 5);
    BoundaryDistanceMatrix d0 = boundary_distance_matrix(disc, 16, 4);
    BoundaryDistanceMatrix dM = boundary_distance_matrix(torus, 16, 4);
    double scale = 1.0;
    for (std::size_t i = 0; i < d0.d.size(); ++i)
      for (std::size_t j = 0; j < d0.d.size(); ++j)
        if (i != j) scale = std::max(scale, d0.d[i][j] / dM.d[i][j]);
    scale *= 1.05;
    InequalityTolerances tol;
    tol.stokes_chain_tol_rel = 0.10;  // 48-gon boundary: coarser snapping
    MainInequalityReport r =
        verify_main_inequality(torus.scaled(scale), disc, 16, 4, 1, tol);
    bool pass = r.pass_area && r.area_D <= (1.0 + 2.0 / kPi) * r.area_M;
    ok = ok && pass;
    detail += fmt("(c)%s scale=%.2f areaD=%.3f bound=%.3f ", pass ? "+" : "-",
                  scale, r.area_D, r.bound);
  }
  {  // (d) inverted scenario must be rejected
    bool rejected = false;
    try {
      verify_main_inequality(flat_disc(1.0, 5), spherical_cap(kPi / 2, 5), 16,
                             6, 0);
    } catch (const HypothesisError& e) {
      rejected = std::string(e.what()) == "hypothesis not satisfied";
    }
    ok = ok && rejected;
    detail += fmt("(d)%s", rejected ? "+" : "-");
  }
  report("AC8", ok, timer.seconds(), 600.0, detail);
}

// --- AC9: bouquet certification -----------------------------------------
void ac9() {
  Timer timer;
  bool ok = true;
  std::string detail;
  for (int genus : {1, 2}) {
    SurfaceMesh surface =
        genus == 1 ? torus_with_hole(4.0, 1) : genus2_with_hole(4.0, 1);
    int x = suggested_basepoint(surface);
    Bouquet bouquet = build_bouquet(surface, x);
    BouquetCertificate cert = verify_bouquet(surface, bouquet, 32);
    bool loops_ok = bouquet.loops.size() == static_cast<std::size_t>(2 * genus);
    bool loop_cut_audits = true;
    for (const StageAudit& stage : bouquet.cut_log)
      if (stage.loop_step && stage.boundary_components != 3)
        loop_cut_audits = false;
    bool pass = loops_ok && loop_cut_audits && cert.pass;
    ok = ok && pass;
    detail += fmt("G=%d%s loops=%zu probes %d/%d ", genus, pass ? "+" : "-",
                  bouquet.loops.size(), cert.probes_total - cert.probes_failed,
                  cert.probes_total);
  }
  report("AC9", ok, timer.seconds(), 300.0, detail);
}

// --- AC10: minimality against exhaustive enumeration --------------------
void ac10() {
  Timer timer;
  bool ok = true;
  std::string detail;
  {
    SurfaceMesh torus = coarse_torus_with_hole(6, 4.0);
    int x = farthest_interior_vertex(torus);
    VertexPath loop = shortest_noncontractible_loop(torus, x);
    DistanceField field = distance_field(torus, x, 0);
    oracles::ExhaustiveLoopSearch search(torus, x, field.dist);
    double best = search.search(loop.length * (1.0 + 1e-9));
    bool match = std::fabs(best - loop.length) <= 1e-9 * loop.length;
    ok = ok && torus.edge_count() <= 500 && match;
    detail += fmt("torus E=%d family=%.6f exhaustive=%.6f ",
                  torus.edge_count(), loop.length, best);
  }
  {
    SurfaceMesh annulus = flat_annulus(4.0, 1.0, 2);
    int x = farthest_interior_vertex(annulus);
    VertexPath loop = shortest_noncontractible_loop(annulus, x);
    DistanceField field = distance_field(annulus, x, 0);
    oracles::ExhaustiveLoopSearch search(annulus, x, field.dist);
    double best = search.search(loop.length * (1.0 + 1e-9));
    bool match = std::fabs(best - loop.length) <= 1e-9 * loop.length;
    ok = ok && annulus.edge_count() <= 500 && match;
    detail += fmt("annulus E=%d family=%.6f exhaustive=%.6f",
                  annulus.edge_count(), loop.length, best);
  }
  report("AC10", ok, timer.seconds(), 120.0, detail);
}

}  // namespace

int main() {
  ac1();
  ac2();
  ac3();
  ac4();
  ac5();
  ac6();
  ac7();
  ac8();
  ac9();
  ac10();
  if (failures == 0) {
    std::printf("all acceptance criteria passed\n");
    return 0;
  }
  std::printf("%d criterion(s) failed\n", failures);
  return 1;
}
