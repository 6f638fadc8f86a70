#include "fillarea/forms.hpp"

#include <algorithm>
#include <cmath>

#include "fillarea/circle.hpp"
#include "fillarea/layout.hpp"

namespace fillarea {

PullbackDensity pullback_density(const SurfaceMesh& mesh,
                                 const std::vector<SpecialField>& fields) {
  const std::size_t n = fields.size();
  if (n < 2) throw std::invalid_argument("need at least two fields");
  const int F = mesh.face_count();

  PullbackDensity out;
  out.density.assign(F, 0.0);
  out.face_area.resize(F);
  out.flagged.assign(F, false);
  out.grad_angle.assign(F, std::vector<double>(n, 0.0));
  out.grad_magnitude.assign(F, std::vector<double>(n, 0.0));
  out.grads_defined.assign(F, true);

  std::vector<Vec2> grads(n);
  for (int f = 0; f < F; ++f) {
    out.face_area[f] = mesh.face_area(f);
    if (out.face_area[f] <= 0.0)
      throw std::runtime_error("degenerate face in density computation");
    const Tri& t = mesh.triangles()[f];
    std::array<Vec2, 3> chart = face_layout(mesh, f);

    for (std::size_t i = 0; i < n; ++i) {
      const SpecialField& field = fields[i];
      grads[i] = face_gradient(chart, {field.values[t[0]], field.values[t[1]],
                                       field.values[t[2]]});
      double mag = norm(grads[i]);
      out.grad_magnitude[f][i] = mag;
      out.grad_angle[f][i] =
          mag > 1e-12 ? std::atan2(grads[i].y, grads[i].x) : 0.0;
      if (mag <= 1e-12) out.grads_defined[f] = false;
      if (!field.argmax.empty() && field.argmax[t[0]] >= 0) {
        if (field.argmax[t[0]] != field.argmax[t[1]] ||
            field.argmax[t[1]] != field.argmax[t[2]])
          out.flagged[f] = true;
      }
    }
    double a = 0.0;
    for (std::size_t i = 0; i < n; ++i)
      a += cross(grads[i], grads[(i + 1) % n]);
    out.density[f] = a;
  }
  return out;
}

double area_integral(const PullbackDensity& density) {
  double sum = 0.0;
  for (std::size_t f = 0; f < density.density.size(); ++f)
    sum += density.density[f] * density.face_area[f];
  return sum;
}

double flagged_area_fraction(const PullbackDensity& density) {
  double flagged = 0.0, total = 0.0;
  for (std::size_t f = 0; f < density.density.size(); ++f) {
    total += density.face_area[f];
    if (density.flagged[f]) flagged += density.face_area[f];
  }
  return total > 0.0 ? flagged / total : 0.0;
}

double max_half_density(const PullbackDensity& density) {
  double best = 0.0;
  for (std::size_t f = 0; f < density.density.size(); ++f)
    if (!density.flagged[f] && density.grads_defined[f])
      best = std::max(best, 0.5 * density.density[f]);
  return best;
}

BoundaryOneFormTrace trace_from_matrix(const BoundaryDistanceMatrix& d0) {
  BoundaryOneFormTrace trace;
  trace.params = d0.params;
  const std::size_t n = d0.params.size();
  trace.values.assign(n, std::vector<double>(n, 0.0));
  for (std::size_t j = 0; j < n; ++j)
    for (std::size_t i = 0; i < n; ++i) trace.values[j][i] = d0.d[i][j];
  return trace;
}

BoundaryOneFormTrace trace_from_fields(const std::vector<SpecialField>& fields,
                                       const std::vector<int>& sample_vertices,
                                       const std::vector<double>& params) {
  BoundaryOneFormTrace trace;
  trace.params = params;
  trace.values.assign(sample_vertices.size(),
                      std::vector<double>(fields.size(), 0.0));
  for (std::size_t j = 0; j < sample_vertices.size(); ++j)
    for (std::size_t i = 0; i < fields.size(); ++i)
      trace.values[j][i] = fields[i].values[sample_vertices[j]];
  return trace;
}

double boundary_integral(const BoundaryOneFormTrace& trace) {
  if (!trace.closed) throw std::invalid_argument("open trace");
  const std::size_t m = trace.values.size();
  if (m < 2) return 0.0;
  const std::size_t n = trace.values.front().size();
  double sum = 0.0;
  for (std::size_t j = 0; j < m; ++j) {
    const std::vector<double>& a = trace.values[j];
    const std::vector<double>& b = trace.values[(j + 1) % m];
    for (std::size_t i = 0; i < n; ++i) {
      std::size_t k = (i + 1) % n;
      sum += 0.5 * (a[i] + b[i]) * (b[k] - a[k]);
    }
  }
  return sum;
}

StokesReport stokes_residual(const SurfaceMesh& mesh,
                             const std::vector<SpecialField>& fields,
                             const BoundaryOneFormTrace& trace) {
  StokesReport report;
  report.area_side = area_integral(pullback_density(mesh, fields));
  report.boundary_side = boundary_integral(trace);
  report.residual = std::fabs(report.area_side - report.boundary_side);
  report.relative = report.residual / (std::fabs(report.boundary_side) + 1.0);
  return report;
}

MainInequalityReport verify_main_inequality(
    const SurfaceMesh& mesh_M, const SurfaceMesh& mesh_D, int n_samples,
    int steiner_per_edge, int genus_expected, const InequalityTolerances& tol) {
  MainInequalityReport report;
  report.n_samples = n_samples;
  report.steiner = steiner_per_edge;

  int genus_M = mesh_M.genus();
  if (genus_M != genus_expected)
    throw std::invalid_argument("genus mismatch: surface has genus " +
                                std::to_string(genus_M));
  report.genus = genus_M;
  if (mesh_D.genus() != 0 || mesh_D.boundary_loops().size() != 1)
    throw std::invalid_argument("reference surface must be a disc");

  BoundarySamples samples_M = boundary_samples(mesh_M, n_samples);
  BoundarySamples samples_D = boundary_samples(mesh_D, n_samples);
  std::vector<DistanceField> dist_M =
      sample_distance_fields(mesh_M, samples_M, steiner_per_edge);
  std::vector<DistanceField> dist_D =
      sample_distance_fields(mesh_D, samples_D, steiner_per_edge);
  BoundaryDistanceMatrix d0 = matrix_from_fields(samples_D, dist_D);
  BoundaryDistanceMatrix dM = matrix_from_fields(samples_M, dist_M);

  double d0_max = 0.0;
  for (const auto& row : d0.d)
    for (double v : row) d0_max = std::max(d0_max, v);
  report.domination_slack = tol.domination_slack_rel * d0_max;
  if (!verify_boundary_domination(d0, dM, report.domination_slack,
                                  tol.param_tol))
    throw HypothesisError("hypothesis not satisfied");

  // The surface side must use the max-form construction; the disc side is
  // computed both ways: max-form as the Stokes chain partner (the boundary
  // sampling error then cancels between the surfaces) and directly from
  // the distance fields, whose integral tends to 2 pi Area(D).
  std::vector<SpecialField> fields_M, fields_D, tilde_D;
  for (int p = 0; p < n_samples; ++p) {
    fields_M.push_back(special_field(mesh_M, d0, p, dist_M));
    fields_D.push_back(special_field(mesh_D, d0, p, dist_D));
    tilde_D.push_back(tilde_field(mesh_D, p, dist_D[p]));
  }

  PullbackDensity density_M = pullback_density(mesh_M, fields_M);
  PullbackDensity density_D = pullback_density(mesh_D, fields_D);
  PullbackDensity density_D_tilde = pullback_density(mesh_D, tilde_D);
  report.integral_M = area_integral(density_M);
  report.integral_D = area_integral(density_D);
  report.integral_D_tilde = area_integral(density_D_tilde);
  report.flagged_fraction_M = flagged_area_fraction(density_M);
  report.flagged_fraction_D = flagged_area_fraction(density_D);
  report.max_half_density_M = max_half_density(density_M);
  report.max_half_density_D = max_half_density(density_D_tilde);

  BoundaryOneFormTrace trace_M = trace_from_fields(
      fields_M, samples_M.loop.vertices, samples_M.loop.params);
  BoundaryOneFormTrace trace_D = trace_from_fields(
      fields_D, samples_D.loop.vertices, samples_D.loop.params);
  report.stokes_internal_M =
      std::fabs(report.integral_M - boundary_integral(trace_M)) /
      (std::fabs(report.integral_M) + 1.0);
  report.stokes_internal_D =
      std::fabs(report.integral_D - boundary_integral(trace_D)) /
      (std::fabs(report.integral_D) + 1.0);

  report.boundary_side = boundary_integral(trace_from_matrix(d0));
  report.stokes_chain = std::fabs(report.integral_M - report.integral_D) /
                        (std::fabs(report.boundary_side) + 1.0);

  report.area_M = mesh_M.total_area();
  report.area_D = mesh_D.total_area();
  report.bound = (1.0 + 2.0 * genus_M / kPi) * report.area_M;

  report.half_density_limit_M = kPi + 2.0 * genus_M;
  report.half_density_limit_D = kPi;

  report.pass_area = report.area_D <= report.bound * (1.0 + tol.area_tol_rel);
  report.pass_stokes = report.stokes_internal_M <= tol.stokes_internal_tol &&
                       report.stokes_internal_D <= tol.stokes_internal_tol &&
                       report.stokes_chain <= tol.stokes_chain_tol_rel;
  report.pass_density =
      report.max_half_density_M <=
          report.half_density_limit_M * (1.0 + tol.density_margin_rel) &&
      report.max_half_density_D <=
          report.half_density_limit_D * (1.0 + tol.density_margin_rel);
  report.pass = report.pass_area && report.pass_stokes && report.pass_density;
  return report;
}

}  // namespace fillarea
