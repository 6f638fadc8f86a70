#include <doctest.h>

#include <cmath>

#include "fillarea/circle.hpp"
#include "fillarea/generators.hpp"
#include "fillarea/geodesics.hpp"
#include "fillarea/mesh.hpp"

using namespace fillarea;

namespace {

SurfaceMesh single_triangle(double a = 1.0, double b = 1.0, double c = 1.0) {
  std::unordered_map<std::uint64_t, double> lengths;
  lengths[edge_key(0, 1)] = a;
  lengths[edge_key(1, 2)] = b;
  lengths[edge_key(0, 2)] = c;
  return SurfaceMesh(3, {{0, 1, 2}}, std::move(lengths));
}

SurfaceMesh unit_square() {
  std::vector<Vec3> pos = {{0, 0, 0}, {1, 0, 0}, {1, 1, 0}, {0, 1, 0}};
  return SurfaceMesh(pos, {{0, 1, 2}, {0, 2, 3}});
}

}  // namespace

TEST_CASE("validate a single triangle") {
  MeshDiagnostics d = single_triangle().validate();
  CHECK(d.ok);
  CHECK(d.vertices == 3);
  CHECK(d.edges == 3);
  CHECK(d.faces == 1);
  CHECK(d.euler == 1);
  CHECK(d.boundary_components == 1);
}

TEST_CASE("validate two glued triangles") {
  MeshDiagnostics d = unit_square().validate();
  CHECK(d.ok);
  CHECK(d.euler == 1);
  CHECK(d.boundary_components == 1);
}

TEST_CASE("triangle inequality violations are itemized") {
  MeshDiagnostics d = single_triangle(1.0, 1.0, 3.0).validate();
  CHECK_FALSE(d.ok);
  bool found = false;
  for (const std::string& f : d.failures)
    if (f.find("triangle inequality") != std::string::npos) found = true;
  CHECK(found);
}

TEST_CASE("orientation conflicts are detected") {
  std::vector<Vec3> pos = {{0, 0, 0}, {1, 0, 0}, {1, 1, 0}, {0, 1, 0}};
  // Second face wound the wrong way: edge 0-2 traversed twice as 0->2.
  SurfaceMesh mesh(pos, {{0, 1, 2}, {0, 2, 3}});
  SurfaceMesh bad(pos, {{0, 1, 2}, {2, 0, 3}});
  CHECK(mesh.validate().ok);
  MeshDiagnostics d = bad.validate();
  CHECK_FALSE(d.ok);
  bool found = false;
  for (const std::string& f : d.failures)
    if (f.find("orientation") != std::string::npos) found = true;
  CHECK(found);
}

TEST_CASE("genus of generated surfaces") {
  CHECK(flat_disc(1.0, 3).genus() == 0);
  CHECK(spherical_cap(kPi / 2, 3).genus() == 0);

  SurfaceMesh torus = coarse_torus_with_hole(8, 4.0);
  MeshDiagnostics d = torus.validate();
  CHECK(d.ok);
  CHECK(d.euler == -1);
  CHECK(d.boundary_components == 1);
  CHECK(torus.genus() == 1);

  SurfaceMesh genus2 = genus2_with_hole(4.0, 1);
  MeshDiagnostics d2 = genus2.validate();
  CHECK(d2.ok);
  CHECK(d2.euler == -3);
  CHECK(d2.boundary_components == 1);
  CHECK(genus2.genus() == 2);
}

TEST_CASE("boundary loops") {
  CHECK(flat_disc(1.0, 2).boundary_loops().size() == 1);
  CHECK(flat_annulus(kTau, 1.0, 2).boundary_loops().size() == 2);

  // Closed surface: a grid torus has no boundary.
  std::unordered_map<std::uint64_t, double> lengths;
  std::vector<Tri> tris;
  const int K = 4;
  auto vid = [&](int i, int j) { return ((i % K + K) % K) * K + ((j % K + K) % K); };
  for (int i = 0; i < K; ++i)
    for (int j = 0; j < K; ++j) {
      tris.push_back({vid(i, j), vid(i + 1, j), vid(i + 1, j + 1)});
      tris.push_back({vid(i, j), vid(i + 1, j + 1), vid(i, j + 1)});
    }
  for (const Tri& t : tris)
    for (int c = 0; c < 3; ++c) {
      int u = t[c], v = t[(c + 1) % 3];
      double diag = (u / K != v / K) && (u % K != v % K) ? std::sqrt(2.0) : 1.0;
      lengths[edge_key(u, v)] = diag;
    }
  SurfaceMesh closed(K * K, tris, std::move(lengths));
  CHECK(closed.boundary_loops().empty());
  CHECK(closed.genus() == 1);
}

TEST_CASE("boundary loop orientation keeps the surface on the left") {
  SurfaceMesh disc = flat_disc(1.0, 2);
  for (const BoundaryLoop& loop : disc.boundary_loops()) {
    for (std::size_t i = 0; i < loop.vertices.size(); ++i) {
      int u = loop.vertices[i];
      int v = loop.vertices[(i + 1) % loop.vertices.size()];
      // The directed edge u->v must appear in its unique face, i.e. the
      // face lies to the left of the traversal.
      CHECK(disc.face_with_directed_edge(u, v) >= 0);
      CHECK(disc.face_with_directed_edge(v, u) < 0);
    }
    // For the planar counterclockwise disc the loop runs counterclockwise.
    double twice_area = 0.0;
    for (std::size_t i = 0; i < loop.vertices.size(); ++i) {
      const Vec3& a = disc.positions()[loop.vertices[i]];
      const Vec3& b =
          disc.positions()[loop.vertices[(i + 1) % loop.vertices.size()]];
      twice_area += a[0] * b[1] - a[1] * b[0];
    }
    CHECK(twice_area > 0.0);
  }
}

TEST_CASE("area of simple meshes") {
  CHECK(unit_square().total_area() == doctest::Approx(1.0).epsilon(1e-14));
  CHECK(flat_disc(1.0, 6).total_area() == doctest::Approx(kPi).epsilon(0.005));
  CHECK(spherical_cap(kPi / 2, 6).total_area() ==
        doctest::Approx(kTau).epsilon(0.01));
}

TEST_CASE("cut along a chord splits a disc into two discs") {
  SurfaceMesh disc = flat_disc(1.0, 3);
  // Diameter path through the center: boundary vertex, ring chain, center,
  // opposite chain, opposite boundary vertex.  Ring j's first vertex sits
  // at angle 0 and ring vertices are ordered by angle, so walk ring first
  // vertices inward, then outward at angle pi (index count/2 of each ring).
  const int L = 8;
  std::vector<int> ring_start(L + 1);
  ring_start[0] = 0;  // center id
  int id = 1;
  for (int j = 1; j <= L; ++j) {
    ring_start[j] = id;
    id += 8 * j;
  }
  VertexPath chord;
  for (int j = L; j >= 1; --j) chord.vertices.push_back(ring_start[j]);
  chord.vertices.push_back(0);
  for (int j = 1; j <= L; ++j)
    chord.vertices.push_back(ring_start[j] + 8 * j / 2);

  CutResult cut = cut_along(disc, chord);
  int comps = 0;
  cut.mesh.connected_component_labels(&comps);
  CHECK(comps == 2);
  std::vector<MeshDiagnostics> parts = component_diagnostics(cut.mesh);
  REQUIRE(parts.size() == 2);
  for (const MeshDiagnostics& part : parts) {
    CHECK(part.euler == 1);
    CHECK(part.boundary_components == 1);
  }
  CHECK(cut.mesh.total_area() == doctest::Approx(disc.total_area()).epsilon(1e-12));
}

TEST_CASE("cut along a nonseparating loop on the torus") {
  SurfaceMesh torus = coarse_torus_with_hole(8, 4.0);
  // A horizontal wrap loop along grid row 0 stays clear of the removed
  // star at (4,4); grid ids survive compaction for rows below the hole.
  VertexPath loop;
  for (int j = 0; j < 8; ++j) loop.vertices.push_back(j);
  loop.vertices.push_back(0);
  CutResult cut = cut_along(torus, loop);

  int comps = 0;
  cut.mesh.connected_component_labels(&comps);
  CHECK(comps == 1);
  CHECK(cut.mesh.genus() == 0);
  CHECK(cut.mesh.boundary_loops().size() == 3);
  CHECK(cut.mesh.total_area() ==
        doctest::Approx(torus.total_area()).epsilon(1e-12));
  CHECK(cut.copies_of(0).size() == 2);
}

TEST_CASE("cut along a spanning arc turns an annulus into a disc") {
  SurfaceMesh annulus = flat_annulus(kTau, 1.0, 2);
  std::vector<BoundaryLoop> loops = annulus.boundary_loops();
  REQUIRE(loops.size() == 2);
  // Column 0 runs from one boundary row to the other.
  int rows = 4;
  int cols = annulus.vertex_count() / (rows + 1);
  VertexPath arc;
  for (int i = 0; i <= rows; ++i) arc.vertices.push_back(i * cols);
  CutResult cut = cut_along(annulus, arc);
  int comps = 0;
  cut.mesh.connected_component_labels(&comps);
  CHECK(comps == 1);
  CHECK(cut.mesh.genus() == 0);
  CHECK(cut.mesh.boundary_loops().size() == 1);
}

TEST_CASE("cut rejects bad paths") {
  SurfaceMesh disc = flat_disc(1.0, 2);
  VertexPath repeated;
  repeated.vertices = {0, 1, 0, 2, 0};
  CHECK_THROWS(cut_along(disc, repeated));
  VertexPath offmesh;
  offmesh.vertices = {0, disc.vertex_count() - 1};  // center to boundary: no edge
  CHECK_THROWS(cut_along(disc, offmesh));
}

TEST_CASE("genus is stable under refinement") {
  SurfaceMesh torus = coarse_torus_with_hole(8, 4.0);
  CHECK(refine(torus, 1).genus() == 1);
  CHECK(refine(flat_disc(1.0, 2), 2).genus() == 0);
}
