#pragma once

// Orientable triangle meshes with boundary, carrying an edge-length metric.
//
// The mesh is the discrete stand-in for a Riemannian surface: topology is a
// consistently oriented triangle list, geometry is a positive length per
// edge (an optional 3-space embedding is kept for generators and plots but
// the metric of record is always the edge-length table).  Meshes are
// immutable after construction; cutting returns a new mesh plus the map
// from new vertex ids back to their originals.

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

namespace fillarea {

using Tri = std::array<int, 3>;
using Vec3 = std::array<double, 3>;

inline std::uint64_t edge_key(int u, int v) {
  if (u > v) std::swap(u, v);
  return (static_cast<std::uint64_t>(static_cast<std::uint32_t>(u)) << 32) |
         static_cast<std::uint32_t>(v);
}

struct MeshDiagnostics {
  bool ok = false;
  int vertices = 0;
  int edges = 0;
  int faces = 0;
  int euler = 0;                 // V - E + F
  int boundary_components = 0;
  int connected_components = 0;
  std::vector<std::string> failures;  // itemized invariant violations
};

struct BoundaryLoop {
  std::vector<int> vertices;   // simple cycle, surface kept on the left
  std::vector<double> params;  // cumulative arc length normalized to [0,1)
  double length = 0.0;
};

struct VertexPath {
  std::vector<int> vertices;  // consecutive entries share a mesh edge
  double length = 0.0;

  bool is_loop() const {
    return vertices.size() >= 2 && vertices.front() == vertices.back();
  }
};

class SurfaceMesh {
 public:
  // Build from an embedding; edge lengths are the 3-space distances.
  SurfaceMesh(std::vector<Vec3> positions, std::vector<Tri> triangles);

  // Build from explicit per-edge lengths keyed by edge_key(u,v).  Positions
  // are optional and carried through untouched.
  SurfaceMesh(int vertex_count, std::vector<Tri> triangles,
              std::unordered_map<std::uint64_t, double> lengths,
              std::vector<Vec3> positions = {});

  int vertex_count() const { return vertex_count_; }
  int edge_count() const { return static_cast<int>(edges_.size()); }
  int face_count() const { return static_cast<int>(triangles_.size()); }
  int euler_characteristic() const {
    return vertex_count_ - edge_count() + face_count();
  }

  const std::vector<Tri>& triangles() const { return triangles_; }
  const std::vector<Vec3>& positions() const { return positions_; }
  bool has_positions() const { return !positions_.empty(); }

  const std::vector<std::array<int, 2>>& edges() const { return edges_; }
  // Edge id for (u,v), or -1 if absent.
  int edge_id(int u, int v) const;
  double edge_length(int edge) const { return lengths_[edge]; }
  double edge_length(int u, int v) const;
  const std::vector<double>& edge_lengths() const { return lengths_; }

  // Faces adjacent to an edge; fewer than two entries for boundary edges.
  const std::array<int, 2>& edge_faces(int edge) const {
    return edge_faces_[edge];
  }
  bool is_boundary_edge(int edge) const { return edge_faces_[edge][1] < 0; }
  bool is_boundary_vertex(int v) const { return boundary_vertex_[v]; }

  // Face containing the directed edge u->v, or -1.
  int face_with_directed_edge(int u, int v) const;

  const std::vector<int>& vertex_edges(int v) const {
    return vertex_edges_[v];
  }

  // Neighbors of v reached by walking counterclockwise around it starting
  // from an arbitrary edge (from the boundary for boundary vertices).
  // Interior vertices yield a full cycle (first neighbor not repeated).
  std::vector<int> vertex_fan(int v) const;

  // Corner angle of `face` at vertex v, from the law of cosines.
  double corner_angle(int face, int v) const;

  // Heron area of one face / total metric area.
  double face_area(int face) const;
  double total_area() const;

  // Full invariant check: manifoldness, orientation consistency, triangle
  // inequalities, connectivity.  Never throws; failures are itemized.
  MeshDiagnostics validate() const;

  // Genus from 2 - 2G - b = euler characteristic; requires a valid connected
  // mesh, throws std::runtime_error("inconsistent topology") otherwise.
  int genus() const;

  // All boundary cycles, oriented with the surface on the left.
  std::vector<BoundaryLoop> boundary_loops() const;

  // Connected components by shared edges; labels in [0, count).
  std::vector<int> connected_component_labels(int* count = nullptr) const;

  // Copy with every edge length multiplied by `factor` (positions kept).
  SurfaceMesh scaled(double factor) const;

 private:
  void build_adjacency();

  int vertex_count_ = 0;
  std::vector<Tri> triangles_;
  std::vector<Vec3> positions_;

  std::vector<std::array<int, 2>> edges_;
  std::vector<double> lengths_;
  std::vector<std::array<int, 2>> edge_faces_;
  std::unordered_map<std::uint64_t, int> edge_index_;
  std::unordered_map<std::uint64_t, int> directed_face_;  // (u,v) -> face
  std::vector<std::vector<int>> vertex_edges_;
  std::vector<bool> boundary_vertex_;
};

// Result of slitting a mesh along a path: the new mesh (possibly
// disconnected) and, per new vertex, the originating vertex id.
struct CutResult {
  SurfaceMesh mesh;
  std::vector<int> vertex_origin;

  std::vector<int> copies_of(int original_vertex) const;
};

// Cut along a simple edge path.  Accepted shapes:
//   - a loop (first == last) through interior vertices only, or
//   - an arc whose endpoints are boundary vertices and whose interior
//     vertices are interior.
// Total area is preserved exactly (same faces, re-indexed corners).
CutResult cut_along(const SurfaceMesh& mesh, const VertexPath& path);

// Per-component diagnostics of a possibly disconnected mesh.
std::vector<MeshDiagnostics> component_diagnostics(const SurfaceMesh& mesh);

double path_length(const SurfaceMesh& mesh, const std::vector<int>& vertices);

}  // namespace fillarea
