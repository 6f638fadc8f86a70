#include <doctest.h>

#include <cmath>
#include <set>

#include <stdexcept>

#include "fillarea/circle.hpp"
#include "fillarea/bouquet.hpp"
#include "fillarea/generators.hpp"
#include "fillarea/geodesics.hpp"
#include "oracles.hpp"

using namespace fillarea;

TEST_CASE("a disc has no noncontractible loop") {
  SurfaceMesh disc = flat_disc(1.0, 2);
  CHECK_THROWS_WITH_AS(shortest_noncontractible_loop(disc, 0),
                       "no noncontractible loop", std::runtime_error);
}

TEST_CASE("annulus core loop has the core circumference") {
  const double circumference = kTau;
  SurfaceMesh annulus = flat_annulus(circumference, 1.0, 3);
  int x = farthest_interior_vertex(annulus);  // on the middle ring
  VertexPath loop = shortest_noncontractible_loop(annulus, x);
  CHECK(loop.is_loop());
  CHECK(loop.length == doctest::Approx(circumference).epsilon(0.05));
  CHECK(loop_is_noncontractible(annulus, loop));
}

TEST_CASE("contractible loops are recognized") {
  SurfaceMesh torus = coarse_torus_with_hole(8, 4.0);
  // The star link of an interior grid vertex bounds a disc.
  int v = 1;  // grid (0,1), away from the removed star at (4,4)
  std::vector<int> fan = torus.vertex_fan(v);
  REQUIRE(fan.size() == 6);
  VertexPath link;
  link.vertices = fan;
  link.vertices.push_back(fan.front());
  link.length = path_length(torus, link.vertices);
  CHECK_FALSE(loop_is_noncontractible(torus, link));
}

TEST_CASE("torus loop cut yields three boundary components") {
  SurfaceMesh torus = coarse_torus_with_hole(8, 4.0);
  int x = farthest_interior_vertex(torus);
  VertexPath loop = shortest_noncontractible_loop(torus, x);
  CutResult cut = cut_along(torus, loop);
  int comps = 0;
  cut.mesh.connected_component_labels(&comps);
  CHECK(comps == 1);
  CHECK(cut.mesh.genus() == 0);
  CHECK(cut.mesh.boundary_loops().size() == 3);

  SUBCASE("the intercopy arc then yields an annulus") {
    std::vector<int> copies = cut.copies_of(x);
    REQUIRE(copies.size() == 2);
    VertexPath arc = shortest_intercopy_arc(cut.mesh, copies[0], copies[1]);
    for (std::size_t i = 1; i + 1 < arc.vertices.size(); ++i)
      CHECK_FALSE(cut.mesh.is_boundary_vertex(arc.vertices[i]));
    CutResult second = cut_along(cut.mesh, arc);
    int comps2 = 0;
    second.mesh.connected_component_labels(&comps2);
    CHECK(comps2 == 1);
    CHECK(second.mesh.genus() == 0);
    CHECK(second.mesh.boundary_loops().size() == 2);
    CHECK(second.mesh.total_area() ==
          doctest::Approx(torus.total_area()).epsilon(1e-12));
  }
}

TEST_CASE("bouquet on the genus-1 surface") {
  SurfaceMesh torus = torus_with_hole(4.0, 1);
  int x = suggested_basepoint(torus);
  Bouquet bouquet = build_bouquet(torus, x);
  CHECK(bouquet.loops.size() == 2);
  for (const VertexPath& loop : bouquet.loops) {
    CHECK(loop.vertices.front() == x);
    CHECK(loop.vertices.back() == x);
  }
  REQUIRE(bouquet.cut_log.size() == 2);
  CHECK(bouquet.cut_log[0].boundary_components == 3);
  CHECK(bouquet.cut_log[0].genus == 0);
  CHECK(bouquet.cut_log[1].boundary_components == 2);
  CHECK(bouquet.cut_log[1].genus == 0);
  CHECK(bouquet.cut_log[1].area ==
        doctest::Approx(torus.total_area()).epsilon(1e-12));

  BouquetCertificate cert = verify_bouquet(torus, bouquet, 16);
  CHECK(cert.annulus_ok);
  CHECK(cert.disjoint_ok);
  CHECK(cert.probes_ok);
  CHECK(cert.pass);
}

TEST_CASE("bouquet on the genus-2 surface") {
  SurfaceMesh surface = genus2_with_hole(4.0, 1);
  int x = suggested_basepoint(surface);
  Bouquet bouquet = build_bouquet(surface, x);
  CHECK(bouquet.loops.size() == 4);
  REQUIRE(bouquet.cut_log.size() == 4);
  // After the first (loop, arc) pair: genus drops by one, two holes.
  CHECK(bouquet.cut_log[1].genus == 1);
  CHECK(bouquet.cut_log[1].boundary_components == 2);
  // Final complement: annulus.
  CHECK(bouquet.cut_log[3].genus == 0);
  CHECK(bouquet.cut_log[3].boundary_components == 2);

  BouquetCertificate cert = verify_bouquet(surface, bouquet, 16);
  CHECK(cert.annulus_ok);
  CHECK(cert.disjoint_ok);
  CHECK(cert.probes_ok);
}

TEST_CASE("negative controls for the bouquet certificate") {
  SurfaceMesh torus = torus_with_hole(4.0, 1);
  int x = suggested_basepoint(torus);
  Bouquet bouquet = build_bouquet(torus, x);

  SUBCASE("crossing loops fail disjointness") {
    Bouquet crossed = bouquet;
    // Make the second loop pass through a vertex of the first.
    REQUIRE(bouquet.loops[0].vertices.size() > 2);
    int stolen = bouquet.loops[0].vertices[1];
    crossed.loops[1].vertices.insert(crossed.loops[1].vertices.begin() + 1,
                                     stolen);
    BouquetCertificate cert = verify_bouquet(torus, crossed, 4);
    CHECK_FALSE(cert.disjoint_ok);
  }

  SUBCASE("a loop through minimizer vertices fails the probe property") {
    Bouquet hostile = bouquet;
    // A fake loop through every neighbor of x blocks every minimizer.
    VertexPath blocker;
    blocker.vertices.push_back(x);
    for (int w : torus.vertex_fan(x)) blocker.vertices.push_back(w);
    blocker.vertices.push_back(x);
    hostile.loops[0] = blocker;
    BouquetCertificate cert = verify_bouquet(torus, hostile, 8);
    CHECK_FALSE(cert.probes_ok);
    CHECK(cert.probes_failed == cert.probes_total);
  }
}

TEST_CASE("family optimum matches exhaustive search on coarse meshes") {
  SurfaceMesh torus = coarse_torus_with_hole(6, 4.0);
  CHECK(torus.edge_count() <= 500);
  int x = farthest_interior_vertex(torus);
  VertexPath loop = shortest_noncontractible_loop(torus, x);

  DistanceField field = distance_field(torus, x, 0);
  oracles::ExhaustiveLoopSearch search(torus, x, field.dist);
  double exhaustive = search.search(loop.length * (1.0 + 1e-9));
  CHECK(exhaustive == doctest::Approx(loop.length).epsilon(1e-9));

  SUBCASE("annulus core loop is exhaustively minimal too") {
    SurfaceMesh annulus = flat_annulus(4.0, 1.0, 2);
    CHECK(annulus.edge_count() <= 500);
    int y = farthest_interior_vertex(annulus);
    VertexPath core = shortest_noncontractible_loop(annulus, y);
    DistanceField f2 = distance_field(annulus, y, 0);
    oracles::ExhaustiveLoopSearch s2(annulus, y, f2.dist);
    CHECK(s2.search(core.length * (1.0 + 1e-9)) ==
          doctest::Approx(core.length).epsilon(1e-9));
  }
}

TEST_CASE("farthest interior vertex sits away from the hole") {
  SurfaceMesh torus = coarse_torus_with_hole(8, 4.0);
  int x = farthest_interior_vertex(torus);
  const Vec3& pos = torus.positions()[x];
  // Hole is centered at (2,2) in a side-4 square; the far point is near a
  // corner of the fundamental domain.
  double dx = std::fabs(pos[0] - 2.0), dy = std::fabs(pos[1] - 2.0);
  CHECK(dx + dy > 2.0);
}
