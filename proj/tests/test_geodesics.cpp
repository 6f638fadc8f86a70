#include <doctest.h>

#include <cmath>
#include <random>

#include <stdexcept>

#include "fillarea/circle.hpp"
#include "fillarea/generators.hpp"
#include "fillarea/geodesics.hpp"

using namespace fillarea;

namespace {

SurfaceMesh path_graph_mesh() {
  // Three collinear unit edges need faces to be a surface; use a thin strip
  // of two triangles per segment instead: vertices 0,1,2 on a line with a
  // ridge vertex above each segment.
  std::vector<Vec3> pos = {{0, 0, 0}, {1, 0, 0}, {2, 0, 0},
                           {0.5, 0.9, 0}, {1.5, 0.9, 0}};
  return SurfaceMesh(pos, {{0, 1, 3}, {1, 4, 3}, {1, 2, 4}});
}

}  // namespace

TEST_CASE("refine preserves the mesh for k = 0 and splits for k = 1") {
  SurfaceMesh tri({{0, 0, 0}, {1, 0, 0}, {0, 1, 0}}, {{0, 1, 2}});
  SurfaceMesh same = refine(tri, 0);
  CHECK(same.vertex_count() == 3);
  CHECK(same.face_count() == 1);

  SurfaceMesh split = refine(tri, 1);
  CHECK(split.vertex_count() == 6);
  CHECK(split.face_count() == 4);
  CHECK(split.total_area() == doctest::Approx(tri.total_area()).epsilon(1e-12));

  SurfaceMesh deep = refine(tri, 3);
  CHECK(deep.face_count() == 16);
  CHECK(deep.total_area() == doctest::Approx(tri.total_area()).epsilon(1e-12));
}

TEST_CASE("refinement preserves area on curved generators") {
  SurfaceMesh cap = spherical_cap(kPi / 2, 3);
  SurfaceMesh fine = refine(cap, 2);
  CHECK(fine.total_area() == doctest::Approx(cap.total_area()).epsilon(1e-12));
}

TEST_CASE("distance field on a path graph") {
  SurfaceMesh mesh = path_graph_mesh();
  DistanceField field = distance_field(mesh, 0);
  CHECK(field.dist[0] == 0.0);
  CHECK(field.dist[1] == doctest::Approx(1.0));
  CHECK(field.dist[2] == doctest::Approx(2.0));

  VertexPath path = shortest_path(mesh, field, 2);
  CHECK(path.vertices == std::vector<int>{0, 1, 2});
  CHECK(path.length == doctest::Approx(field.dist[2]).epsilon(1e-15));

  VertexPath trivial = shortest_path(mesh, field, 0);
  CHECK(trivial.vertices == std::vector<int>{0});
  CHECK(trivial.length == 0.0);
}

TEST_CASE("disc center-to-boundary distances converge to the radius") {
  SurfaceMesh disc = flat_disc(1.0, 4);
  DistanceField field = distance_field(disc, 0, 4);
  for (const BoundaryLoop& loop : disc.boundary_loops())
    for (int v : loop.vertices)
      CHECK(field.dist[v] == doctest::Approx(1.0).epsilon(0.02));
}

TEST_CASE("hemisphere pole-to-equator distances approach pi/2") {
  SurfaceMesh cap = spherical_cap(kPi / 2, 4);
  DistanceField field = distance_field(cap, 0, 4);
  for (const BoundaryLoop& loop : cap.boundary_loops())
    for (int v : loop.vertices)
      CHECK(field.dist[v] == doctest::Approx(kPi / 2).epsilon(0.02));
}

TEST_CASE("graph distance is non-increasing along nested steiner counts") {
  SurfaceMesh disc = flat_disc(1.0, 3);
  int target = disc.vertex_count() - 3;  // a boundary vertex away from angle 0
  int probe = 1 + 8 * 2;                 // a ring-3 vertex
  double prev = std::numeric_limits<double>::infinity();
  for (int s : {0, 1, 3, 7}) {
    DistanceField field = distance_field(disc, probe, s);
    CHECK(field.dist[target] <= prev + 1e-12);
    prev = field.dist[target];
  }
}

TEST_CASE("distance symmetry and edge relaxation") {
  SurfaceMesh disc = flat_disc(1.0, 3);
  std::mt19937_64 rng(31);
  for (int trial = 0; trial < 4; ++trial) {
    int a = rng() % disc.vertex_count();
    int b = rng() % disc.vertex_count();
    DistanceField fa = distance_field(disc, a, 3);
    DistanceField fb = distance_field(disc, b, 3);
    CHECK(fa.dist[b] == doctest::Approx(fb.dist[a]).epsilon(1e-12));
    for (int e = 0; e < disc.edge_count(); ++e) {
      int u = disc.edges()[e][0], v = disc.edges()[e][1];
      CHECK(fa.dist[v] <= fa.dist[u] + disc.edge_length(e) + 1e-12);
    }
  }
}

TEST_CASE("sampled triangle inequality") {
  SurfaceMesh cap = spherical_cap(kPi / 2, 3);
  DistanceField f0 = distance_field(cap, 0, 2);
  std::mt19937_64 rng(77);
  double diameter = 0.0;
  for (double d : f0.dist) diameter = std::max(diameter, d);
  for (int trial = 0; trial < 32; ++trial) {
    int a = rng() % cap.vertex_count();
    int b = rng() % cap.vertex_count();
    DistanceField fa = distance_field(cap, a, 2);
    DistanceField fb = distance_field(cap, b, 2);
    for (int c = 0; c < cap.vertex_count(); c += 97)
      CHECK(fa.dist[b] <= fa.dist[c] + fb.dist[c] + 1e-9 * diameter);
  }
}

TEST_CASE("path length always equals the stored distance") {
  SurfaceMesh torus = coarse_torus_with_hole(8, 4.0);
  DistanceField field = distance_field(torus, 0);
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 50; ++trial) {
    int v = rng() % torus.vertex_count();
    VertexPath path = shortest_path(torus, field, v);
    double total = path_length(torus, path.vertices);
    CHECK(total == doctest::Approx(field.dist[v]).epsilon(1e-12));
  }
}

TEST_CASE("boundary matrix of the flat disc matches circle chords") {
  SurfaceMesh disc = flat_disc(1.0, 4);
  BoundaryDistanceMatrix mat = boundary_distance_matrix(disc, 4, 4);
  CHECK(mat.d[0][1] == doctest::Approx(std::sqrt(2.0)).epsilon(0.02));
  CHECK(mat.d[0][2] == doctest::Approx(2.0).epsilon(0.02));
  CHECK(mat.d[1][3] == doctest::Approx(2.0).epsilon(0.02));
  for (int i = 0; i < 4; ++i) {
    CHECK(mat.d[i][i] == 0.0);
    for (int j = 0; j < 4; ++j) CHECK(mat.d[i][j] == mat.d[j][i]);
  }
}

TEST_CASE("boundary matrix of the hemisphere matches equator arcs") {
  SurfaceMesh cap = spherical_cap(kPi / 2, 4);
  BoundaryDistanceMatrix mat = boundary_distance_matrix(cap, 4, 4);
  CHECK(mat.d[0][1] == doctest::Approx(kPi / 2).epsilon(0.02));
  CHECK(mat.d[0][2] == doctest::Approx(kPi).epsilon(0.02));
}

TEST_CASE("boundary matrix requires a single boundary loop") {
  SurfaceMesh annulus = flat_annulus(kTau, 1.0, 2);
  CHECK_THROWS_WITH_AS(boundary_distance_matrix(annulus, 4, 0),
                       "expected filling boundary", std::runtime_error);
}

TEST_CASE("boundary domination") {
  SurfaceMesh disc = flat_disc(1.0, 4);
  SurfaceMesh cap = spherical_cap(kPi / 2, 4);
  BoundaryDistanceMatrix chords = boundary_distance_matrix(disc, 8, 4);
  BoundaryDistanceMatrix arcs = boundary_distance_matrix(cap, 8, 4);

  CHECK(verify_boundary_domination(chords, arcs, 0.02));
  CHECK(verify_boundary_domination(chords, chords, 0.0));
  CHECK_FALSE(verify_boundary_domination(arcs, chords, 0.02));

  BoundaryDistanceMatrix wrong = boundary_distance_matrix(disc, 4, 4);
  CHECK_THROWS_WITH_AS(verify_boundary_domination(wrong, arcs, 0.0),
                       "sample mismatch", std::invalid_argument);
}
