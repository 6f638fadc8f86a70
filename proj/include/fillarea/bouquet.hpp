#pragma once

// Bouquets of loops at an interior basepoint.
//
// On a genus-G surface with one boundary circle, a bouquet is 2G loops at a
// basepoint x whose removal leaves an annulus and which avoid every
// boundary-to-x minimizer away from x.  Construction alternates shortest
// nonseparating loops with shortest arcs between basepoint copies in the
// progressively cut surface, certifying each stage by recomputed topology.

#include <cstdint>
#include <string>
#include <vector>

#include "fillarea/mesh.hpp"

namespace fillarea {

// True iff cutting the simple interior loop neither disconnects the surface
// into a piece that is a disc nor fails to change anything; equivalently,
// the loop is not null-homotopic.  Decided by dual connectivity, without
// rebuilding the mesh.
bool loop_is_noncontractible(const SurfaceMesh& mesh, const VertexPath& loop);

// Shortest loop through interior vertex x that is noncontractible, from the
// candidate family tree-path(x,u) + (u,v) + tree-path(v,x) over non-tree
// edges, keeping only simple interior loops.  Throws
// std::runtime_error("no noncontractible loop") on simply connected input.
VertexPath shortest_noncontractible_loop(const SurfaceMesh& mesh, int x);

// Shortest path between two basepoint copies in a cut mesh whose interior
// avoids all boundary vertices.  Throws if the copies are disconnected.
VertexPath shortest_intercopy_arc(const SurfaceMesh& cut_mesh, int copy_a,
                                  int copy_b);

struct StageAudit {
  int stage = 0;               // 1-based cut index
  bool loop_step = false;      // loop (odd round start) vs arc
  VertexPath path;             // in the coordinates of the mesh it cut
  int vertices = 0, edges = 0, faces = 0;
  int euler = 0;
  int boundary_components = 0;
  int genus = 0;
  double area = 0.0;
};

struct Bouquet {
  int basepoint = -1;
  std::vector<VertexPath> loops;   // 2G loops on the original mesh
  std::vector<StageAudit> cut_log;
};

// G rounds of (loop, arc) cuts; throws with the failing stage in the
// message if any certification fails.  Requires genus >= 1 and interior x.
Bouquet build_bouquet(const SurfaceMesh& mesh, int x);

struct BouquetCertificate {
  bool annulus_ok = false;    // replayed cuts end in genus 0, b = 2, connected
  bool disjoint_ok = false;   // loops pairwise meet only at the basepoint
  bool probes_ok = false;     // minimizers to probes avoid all loops
  int probes_total = 0;
  int probes_failed = 0;
  std::vector<StageAudit> replay_log;
  bool pass = false;
};

BouquetCertificate verify_bouquet(const SurfaceMesh& mesh,
                                  const Bouquet& bouquet, int probe_count,
                                  std::uint64_t seed = 17);

// Interior vertex maximizing edge-graph distance to the boundary.
int farthest_interior_vertex(const SurfaceMesh& mesh);

// Preferred bouquet basepoint: the interior vertex of maximal degree,
// breaking ties by boundary distance (generators pre-fan this vertex so
// loops and minimizers can leave it in many distinct directions).
int suggested_basepoint(const SurfaceMesh& mesh);

}  // namespace fillarea
