#pragma once

// Test-surface generators.
//
// All generators produce valid oriented meshes with uniformly spaced
// boundary vertices where the construction allows it, and perturb interior
// geometry by a tiny seeded jitter so that shortest paths are generically
// unique.  Analytic reference values, where they exist, are noted on each
// generator.

#include <cstdint>
#include <string>

#include "fillarea/mesh.hpp"

namespace fillarea {

inline constexpr std::uint64_t kDefaultJitterSeed = 0x5eed5eed5eedULL;

// Flat disc of the given radius in the z = 0 plane.  `level` sets the ring
// count 2^level; the boundary has 8 * 2^level uniformly spaced vertices.
// Analytic area: pi * radius^2.  Interior vertices are jittered by
// ~1e-7 * radius.
SurfaceMesh flat_disc(double radius, int level,
                      std::uint64_t seed = kDefaultJitterSeed);

// Geodesic polar cap of a unit sphere up to polar angle `angle` (pi/2 gives
// the hemisphere).  Ring count 2^level, boundary 8 * 2^level vertices.
// Analytic area: 2 * pi * (1 - cos(angle)).
SurfaceMesh spherical_cap(double angle, int level,
                          std::uint64_t seed = kDefaultJitterSeed);

// Flat annulus (cylinder): given circumference, width, and 2^level rows.
// Two boundary loops; the metric is exactly flat.
SurfaceMesh flat_annulus(double circumference, double width, int level,
                         std::uint64_t seed = kDefaultJitterSeed);

// Square flat torus of side `side` on a (4 * 2^level)^2 grid with one
// vertex star removed, then 8-fold subdivided: genus 1, one boundary loop
// of 48 vertices.  A natural bouquet basepoint is the vertex farthest from
// the boundary (the grid region diametrically opposite the hole).
SurfaceMesh torus_with_hole(double side, int level,
                            std::uint64_t seed = kDefaultJitterSeed);

// Unsubdivided K x K variant with the hexagonal hole, small enough for
// exhaustive loop searches.
SurfaceMesh coarse_torus_with_hole(int K, double side,
                                   std::uint64_t seed = kDefaultJitterSeed);

// Connected sum of two such flat tori glued along removed-star hexagons,
// with one further star removed as the boundary: genus 2, one boundary
// loop of 48 vertices.  The vertex farthest from the boundary lies deep in
// the torus that does not carry the hole.
SurfaceMesh genus2_with_hole(double side, int level,
                             std::uint64_t seed = kDefaultJitterSeed);

// Name-based dispatch for the CLI: flat_disc, spherical_cap, flat_annulus,
// torus_with_hole, genus2_with_hole.  Unknown names throw.
struct GeneratorParams {
  double radius = 1.0;         // flat_disc
  double angle = 1.5707963267948966;  // spherical_cap
  double circumference = 6.283185307179586;  // flat_annulus
  double width = 1.0;          // flat_annulus
  double side = 4.0;           // torus generators
  int level = 4;
  std::uint64_t seed = kDefaultJitterSeed;
};
SurfaceMesh generate(const std::string& name, const GeneratorParams& params);

}  // namespace fillarea
