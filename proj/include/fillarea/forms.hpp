#pragma once

// The cyclic 2-form pipeline and the filling-inequality verifier.
//
// For fields f_1..f_n the pulled-back 2-form has per-face density
//   A = sum_i det(grad f_i, grad f_{i+1})   (cyclic),
// half of which equals the cyclic oriented-area sum of the gradient
// directions when the gradients are unit.  Integrating A over the surface
// and comparing with the boundary line integral of the primitive
// mu = sum_i x_i dx_{i+1} is the discrete Stokes consistency check; the
// final verifier chains it into Area(D) <= (1 + 2G/pi) Area(M).

#include <stdexcept>
#include <vector>

#include "fillarea/fields.hpp"
#include "fillarea/geodesics.hpp"
#include "fillarea/mesh.hpp"

namespace fillarea {

struct PullbackDensity {
  std::vector<double> density;      // A per face
  std::vector<double> face_area;
  std::vector<bool> flagged;        // some field's argmax jumps across face
  // Per-face gradient data for the circle-geometry cross-check.
  std::vector<std::vector<double>> grad_angle;      // [face][field]
  std::vector<std::vector<double>> grad_magnitude;  // [face][field]
  std::vector<bool> grads_defined;  // all magnitudes bounded away from zero
};

// Per-face density of the pulled-back cyclic 2-form (n = fields.size() >= 2).
PullbackDensity pullback_density(const SurfaceMesh& mesh,
                                 const std::vector<SpecialField>& fields);

// Integral sum A * area over all faces (flagged ones included).
double area_integral(const PullbackDensity& density);

// Area of flagged faces divided by total area.
double flagged_area_fraction(const PullbackDensity& density);

// Max of A/2 over unflagged faces with defined gradients.
double max_half_density(const PullbackDensity& density);

// Values of (f_1..f_n) at boundary samples, cyclically closed.
struct BoundaryOneFormTrace {
  std::vector<double> params;               // sample parameters
  std::vector<std::vector<double>> values;  // [sample][field]
  bool closed = true;
};

// Trace whose values are the reference boundary distances themselves:
// values[j][i] = d0(p_i, p_j).  This is the shared boundary data both
// surfaces are compared against.
BoundaryOneFormTrace trace_from_matrix(const BoundaryDistanceMatrix& d0);

// Trace restricted from computed fields at the sample vertices.
BoundaryOneFormTrace trace_from_fields(const std::vector<SpecialField>& fields,
                                       const std::vector<int>& sample_vertices,
                                       const std::vector<double>& params);

// Trapezoidal line integral of mu = sum_i x_i dx_{i+1} along the cyclic
// trace.  Throws std::invalid_argument("open trace") if not closed.
double boundary_integral(const BoundaryOneFormTrace& trace);

struct StokesReport {
  double area_side = 0.0;
  double boundary_side = 0.0;
  double residual = 0.0;  // |area_side - boundary_side|
  double relative = 0.0;  // residual / (|boundary_side| + 1)
};

StokesReport stokes_residual(const SurfaceMesh& mesh,
                             const std::vector<SpecialField>& fields,
                             const BoundaryOneFormTrace& trace);

// Thrown when the boundary-distance domination hypothesis fails: the
// theorem's conclusion is then not expected to hold and the run must be
// distinguished from a conclusion failure.
class HypothesisError : public std::runtime_error {
 public:
  explicit HypothesisError(const std::string& what)
      : std::runtime_error(what) {}
};

struct InequalityTolerances {
  double area_tol_rel = 0.02;          // slack on Area(D) <= bound
  double stokes_internal_tol = 1e-9;   // per-surface exact-form residual
  double stokes_chain_tol_rel = 0.03;  // cross-surface integral agreement
  double density_margin_rel = 0.25;    // on the pointwise density bounds
  double domination_slack_rel = 0.02;  // fraction of max d0 entry
  double param_tol = 0.02;             // sample-parameter alignment
};

struct MainInequalityReport {
  int n_samples = 0;
  int steiner = 0;
  int genus = 0;

  double area_M = 0.0, area_D = 0.0;
  double bound = 0.0;  // (1 + 2G/pi) * area_M

  double domination_slack = 0.0;

  // Pullback integrals: the surface side and the disc side computed the
  // same way (the chain partners), plus the disc side from the direct
  // distance fields, whose limit is 2 pi Area(D).
  double integral_M = 0.0, integral_D = 0.0;
  double integral_D_tilde = 0.0;

  // Stokes pieces: each area integral against the trapezoid over its own
  // full boundary restriction (exact for affine interpolation), the shared
  // coarse trapezoid over the d0 trace, and the cross-surface chain
  // |integral_M - integral_D| that the boundary agreement forces to zero.
  double stokes_internal_M = 0.0, stokes_internal_D = 0.0;
  double boundary_side = 0.0;
  double stokes_chain = 0.0;

  double max_half_density_M = 0.0, max_half_density_D = 0.0;
  double half_density_limit_M = 0.0, half_density_limit_D = 0.0;
  double flagged_fraction_M = 0.0, flagged_fraction_D = 0.0;

  bool pass_area = false;
  bool pass_stokes = false;
  bool pass_density = false;
  bool pass = false;
};

// Full pipeline: boundary matrices, domination hypothesis (throws
// HypothesisError on failure), special fields on both surfaces, densities,
// integrals, Stokes residuals, and the area inequality verdict.
MainInequalityReport verify_main_inequality(
    const SurfaceMesh& mesh_M, const SurfaceMesh& mesh_D, int n_samples,
    int steiner_per_edge, int genus_expected,
    const InequalityTolerances& tol = {});

}  // namespace fillarea
