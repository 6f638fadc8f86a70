#pragma once

// Special distance functions on a filling surface.
//
// Given the boundary matrix d0 of the reference disc and per-sample
// distance fields on the surface M, the field for a boundary sample p is
//   f_p(x) = max_q ( d0(p,q) - d(x,q) )
// over the shared sample set.  The maximizer q is the "point of maximum"
// (nearest one under ties), f_p is 1-Lipschitz, agrees with d0(p,.) on the
// boundary, and its gradient at x points along the shortest path from x to
// the maximizer.  These facts are the load-bearing checks of the whole
// pipeline and each has an operation here.

#include <optional>
#include <vector>

#include "fillarea/geodesics.hpp"
#include "fillarea/mesh.hpp"

namespace fillarea {

// Cyclic directions of the edges around an interior vertex, with corner
// angles rescaled so the total angle is 2*pi (a unit-circle tangent frame).
struct TangentFrame {
  int vertex = -1;
  double total_angle = 0.0;             // before rescaling
  std::vector<int> neighbors;           // counterclockwise fan order
  std::vector<double> direction;        // rescaled angle of each out-edge
  std::vector<int> fan_faces;           // face between neighbor i and i+1

  // Rescaled direction of the out-edge toward `neighbor`; throws if absent.
  double edge_direction(int neighbor) const;
};

TangentFrame tangent_frame(const SurfaceMesh& mesh, int vertex);

struct SpecialField {
  int p_index = -1;                  // sample index of the basepoint p
  std::vector<double> values;        // f_p per vertex
  std::vector<int> argmax;           // maximizing sample index (or -1)
  std::vector<double> grad_dir;      // tangent-frame angle; NaN if undefined
  std::vector<bool> grad_defined;
};

// The max-form field on `mesh` against reference boundary distances d0.
// `fields` must hold one DistanceField per d0 sample, in sample order.
// Ties within 1e-9 resolve to the nearest maximizer, then the lowest index.
SpecialField special_field(const SurfaceMesh& mesh,
                           const BoundaryDistanceMatrix& d0, int p_index,
                           const std::vector<DistanceField>& fields);

// The disc shortcut: on a disc the special field of p equals the distance
// field from p, so build it directly from one Dijkstra run.  The gradient
// points opposite to the first hop toward p; argmax is left unset.
SpecialField tilde_field(const SurfaceMesh& disc, int p_index,
                         const BoundarySamples& samples,
                         int steiner_per_edge);

// Same, reusing an existing distance field from the p-th sample vertex.
SpecialField tilde_field(const SurfaceMesh& disc, int p_index,
                         const DistanceField& from_p);

// Max over shared boundary samples of |fM - fD|.
double check_boundary_agreement(const SpecialField& fM,
                                const std::vector<int>& sample_vertices_M,
                                const SpecialField& fD,
                                const std::vector<int>& sample_vertices_D);

// Gradient direction of `field` at interior vertex x as a tangent-frame
// angle.  Throws for boundary vertices and undefined gradients.
double gradient_direction(const SurfaceMesh& mesh, const SpecialField& field,
                          int x);

enum class OrderCheck { kCounterclockwise, kViolated, kDegenerate };

// Whether the nearest points of maximum q_1..q_n for the counterclockwise
// samples p (all of them) sit in counterclockwise order around the
// boundary, judged from interior vertex x.  Degenerate when two maximizers
// coincide.
OrderCheck check_order_of_maxima(const BoundaryDistanceMatrix& d0,
                                 const std::vector<SpecialField>& fields_by_p,
                                 int x);

// True iff the pair {p_i, q_j} does not separate {p_j, q_i} on the circle:
// p_j and q_i lie in the same closed arc of S^1 \ {p_i, q_j}.  Arguments
// are boundary parameters in [0, 1).
bool check_non_separation(double p_i, double q_i, double p_j, double q_j);

// check_order_of_maxima with the degenerate-maximizer retry policy: the
// sample grid is rotated by one boundary vertex per attempt (the discrete
// analogue of a small perturbation of the points).  Throws
// std::runtime_error("degenerate configuration") when the budget runs out.
OrderCheck check_order_of_maxima_perturbed(const SurfaceMesh& mesh,
                                           int n_samples, int steiner_per_edge,
                                           int x, int max_attempts = 5);

}  // namespace fillarea
