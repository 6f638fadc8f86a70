#pragma once

// Geodesic distances and shortest paths on a SurfaceMesh.
//
// Two graphs are in play.  The plain edge graph gives combinatorial paths
// (cutting, loops) and is exact for the mesh's own metric.  For Riemannian
// accuracy, distance fields can additionally route through Steiner points
// placed uniformly on edges, connected across each face by straight
// segments of the face's intrinsic layout; shortest paths in that graph
// converge to polyhedral geodesic distances as the per-edge count grows.
// Distances returned are always per mesh vertex.

#include <vector>

#include "fillarea/mesh.hpp"

namespace fillarea {

// One hop of a shortest-path tree, pointing toward the source.  Either a
// mesh vertex or a point on edge (eu,ev) at fraction t measured from eu.
struct PredHop {
  int vertex = -1;
  int eu = -1, ev = -1;
  double t = 0.0;

  bool is_vertex() const { return vertex >= 0; }
  bool none() const { return vertex < 0 && eu < 0; }
};

struct DistanceField {
  int source = -1;
  int steiner = 0;                // per-edge Steiner count used
  std::vector<double> dist;       // per mesh vertex
  std::vector<PredHop> pred;      // next hop toward the source
};

// Uniform (k+1)-fold metric subdivision: k new vertices per edge plus the
// interior lattice per face.  Original vertex ids are preserved; total area
// is preserved to roundoff.  k = 0 returns the mesh unchanged.
SurfaceMesh refine(const SurfaceMesh& mesh, int steiner_per_edge);

// Single-source shortest distances.  steiner_per_edge = 0 is Dijkstra on
// the mesh edge graph; larger values route through the Steiner graph.
// Ties in the tree are broken toward the lowest node id.
DistanceField distance_field(const SurfaceMesh& mesh, int source,
                             int steiner_per_edge = 0);

// Recover the vertex path source -> target.  Requires a steiner = 0 field
// (only those have vertex-valued hops throughout).
VertexPath shortest_path(const SurfaceMesh& mesh, const DistanceField& field,
                         int target);

// Shortest path between two vertices that avoids `forbidden` vertices in
// its interior (endpoints exempt).  Edge graph only.  Returns an empty path
// if none exists.
VertexPath constrained_shortest_path(const SurfaceMesh& mesh, int from, int to,
                                     const std::vector<bool>& forbidden);

struct BoundaryDistanceMatrix {
  std::vector<double> params;   // snapped sample parameters in [0,1)
  std::vector<int> vertices;    // sample vertex per parameter
  std::vector<std::vector<double>> d;  // symmetric, zero diagonal
  double boundary_length = 0.0;
};

// n_samples boundary points at (approximately) equal arc-length parameters,
// snapped to boundary vertices, with pairwise surface distances.  The mesh
// must have exactly one boundary loop.
BoundaryDistanceMatrix boundary_distance_matrix(const SurfaceMesh& mesh,
                                                int n_samples,
                                                int steiner_per_edge = 0);

// Sample vertices only (no matrix) -- shared by field construction.
// `phase` rotates the requested parameters; stepping it by one boundary
// vertex is the discrete analogue of perturbing the sample points.
struct BoundarySamples {
  std::vector<double> params;
  std::vector<int> vertices;
  BoundaryLoop loop;
};
BoundarySamples boundary_samples(const SurfaceMesh& mesh, int n_samples,
                                 double phase = 0.0);

// One distance field per sample vertex, in sample order.
std::vector<DistanceField> sample_distance_fields(const SurfaceMesh& mesh,
                                                  const BoundarySamples& samples,
                                                  int steiner_per_edge);

BoundaryDistanceMatrix matrix_from_fields(const BoundarySamples& samples,
                                          const std::vector<DistanceField>& fields);

// True iff d0 <= d + slack entrywise.  Parameters must agree within
// param_tol (fraction of the boundary), else throws.
bool verify_boundary_domination(const BoundaryDistanceMatrix& d0,
                                const BoundaryDistanceMatrix& d, double slack,
                                double param_tol = 0.02);

}  // namespace fillarea
