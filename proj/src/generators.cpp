#include "fillarea/generators.hpp"

#include <cmath>
#include <functional>
#include <stdexcept>

#include "fillarea/circle.hpp"
#include "fillarea/bouquet.hpp"
#include "fillarea/geodesics.hpp"

namespace fillarea {

namespace {

// splitmix64; used for deterministic per-vertex jitter.
std::uint64_t mix64(std::uint64_t z) {
  z += 0x9e3779b97f4a7c15ULL;
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

// Uniform in [-1, 1].
double jitter_unit(std::uint64_t seed, std::uint64_t index, int lane) {
  std::uint64_t h = mix64(seed ^ mix64(index * 3 + static_cast<std::uint64_t>(lane)));
  return 2.0 * (static_cast<double>(h >> 11) * 0x1.0p-53) - 1.0;
}

// Triangulate the strip between two concentric rings by merging on angle.
// Ring entries are (vertex id, angle); both rings must be sorted ascending
// starting near angle 0.  Triangles come out counterclockwise.
void triangulate_strip(const std::vector<std::pair<int, double>>& inner,
                       const std::vector<std::pair<int, double>>& outer,
                       std::vector<Tri>& tris) {
  const std::size_t na = inner.size(), nb = outer.size();
  std::size_t i = 0, j = 0;
  auto angle_at = [](const std::vector<std::pair<int, double>>& ring,
                     std::size_t k) {
    return k < ring.size() ? ring[k].second : ring[k - ring.size()].second + kTau;
  };
  while (i < na || j < nb) {
    bool advance_inner;
    if (i >= na) advance_inner = false;
    else if (j >= nb) advance_inner = true;
    else advance_inner = angle_at(inner, i + 1) <= angle_at(outer, j + 1);
    int a = inner[i % na].first;
    int b = outer[j % nb].first;
    if (advance_inner) {
      int a2 = inner[(i + 1) % na].first;
      tris.push_back({a, b, a2});
      ++i;
    } else {
      int b2 = outer[(j + 1) % nb].first;
      tris.push_back({a, b, b2});
      ++j;
    }
  }
}

// Shared combinatorics of the polar generators: ring j of 8j vertices,
// j = 1..L, around a single apex.  `place` maps (ring, angle, jittered)
// to a 3-space position; boundary ring vertices are never jittered.
SurfaceMesh polar_cap_mesh(int rings, std::uint64_t seed,
                           double jitter_scale,
                           const std::function<Vec3(int, double)>& place) {
  const int m = 8;
  std::vector<Vec3> positions;
  positions.push_back(place(0, 0.0));  // apex
  std::vector<std::vector<std::pair<int, double>>> ring_entries(rings + 1);
  for (int j = 1; j <= rings; ++j) {
    int count = m * j;
    for (int k = 0; k < count; ++k) {
      double angle = kTau * k / count;
      int id = static_cast<int>(positions.size());
      if (j < rings) {
        angle += jitter_scale * jitter_unit(seed, id, 0) / j;
      }
      ring_entries[j].push_back({id, angle});
      positions.push_back(place(j, angle));
    }
  }
  std::vector<Tri> tris;
  for (int k = 0; k < m; ++k)
    tris.push_back({0, ring_entries[1][k].first,
                    ring_entries[1][(k + 1) % m].first});
  for (int j = 1; j < rings; ++j)
    triangulate_strip(ring_entries[j], ring_entries[j + 1], tris);
  return SurfaceMesh(std::move(positions), std::move(tris));
}

// Multiply non-boundary edge lengths by (1 + eps * u) to break exact ties
// in shortest paths on perfectly symmetric metrics.
SurfaceMesh jitter_lengths(const SurfaceMesh& mesh, std::uint64_t seed,
                           double eps) {
  std::unordered_map<std::uint64_t, double> lengths;
  for (int e = 0; e < mesh.edge_count(); ++e) {
    double len = mesh.edge_length(e);
    if (!mesh.is_boundary_edge(e))
      len *= 1.0 + eps * jitter_unit(seed, static_cast<std::uint64_t>(e), 7);
    lengths[edge_key(mesh.edges()[e][0], mesh.edges()[e][1])] = len;
  }
  return SurfaceMesh(mesh.vertex_count(), mesh.triangles(), std::move(lengths),
                     mesh.positions());
}

struct GridTorus {
  int K = 0;
  std::vector<Tri> tris;

  int vid(int i, int j) const {
    return ((i % K + K) % K) * K + ((j % K + K) % K);
  }
};

GridTorus grid_torus(int K) {
  GridTorus t;
  t.K = K;
  for (int i = 0; i < K; ++i) {
    for (int j = 0; j < K; ++j) {
      t.tris.push_back({t.vid(i, j), t.vid(i + 1, j), t.vid(i + 1, j + 1)});
      t.tris.push_back({t.vid(i, j), t.vid(i + 1, j + 1), t.vid(i, j + 1)});
    }
  }
  return t;
}

// Faces incident to vertex v in the grid torus.
bool face_contains(const Tri& t, int v) {
  return t[0] == v || t[1] == v || t[2] == v;
}

// Link of (a,b) in boundary-loop order (surface kept on the left after the
// star is removed): N, W, SW, S, E, NE.
std::vector<int> star_link_loop(const GridTorus& g, int a, int b) {
  return {g.vid(a + 1, b),     g.vid(a, b - 1), g.vid(a - 1, b - 1),
          g.vid(a - 1, b),     g.vid(a, b + 1), g.vid(a + 1, b + 1)};
}

struct TorusPiece {
  std::vector<Tri> tris;          // faces with star(s) removed, old ids
  std::vector<int> removed;       // removed vertices
};

TorusPiece remove_stars(const GridTorus& g, const std::vector<std::pair<int, int>>& stars) {
  TorusPiece piece;
  std::vector<int> removed_ids;
  for (auto [a, b] : stars) removed_ids.push_back(g.vid(a, b));
  for (const Tri& t : g.tris) {
    bool keep = true;
    for (int v : removed_ids)
      if (face_contains(t, v)) keep = false;
    if (keep) piece.tris.push_back(t);
  }
  piece.removed = removed_ids;
  return piece;
}

// Compact vertex ids of a face soup, preserving relative order (so grid
// ids below any removed vertex survive unchanged).  Returns old -> new.
std::vector<int> compact_ids(std::vector<Tri>& tris, int old_count) {
  std::vector<bool> used(old_count, false);
  for (const Tri& t : tris)
    for (int c = 0; c < 3; ++c) used[t[c]] = true;
  std::vector<int> map(old_count, -1);
  int next = 0;
  for (int v = 0; v < old_count; ++v)
    if (used[v]) map[v] = next++;
  for (Tri& t : tris)
    for (int c = 0; c < 3; ++c) t[c] = map[t[c]];
  return map;
}

// Jittered planar coordinates for grid vertex (i,j).  The regular square
// grid ties every monotone staircase, which makes shortest paths wildly
// non-unique; displacing vertices by a fraction of a cell gives a generic
// flat metric with essentially unique minimizers.
Vec3 grid_position(int i, int j, double cell, double jitter_frac,
                   std::uint64_t seed, int K, double z = 0.0) {
  std::uint64_t id = static_cast<std::uint64_t>(((i % K + K) % K)) * K +
                     static_cast<std::uint64_t>((j % K + K) % K);
  double jx = jitter_frac * cell * jitter_unit(seed, id, 11);
  double jy = jitter_frac * cell * jitter_unit(seed, id, 12);
  return {j * cell + jx, i * cell + jy, z};
}

// Lengths from wrapped planar distances over the fundamental square.
SurfaceMesh assemble_flat(const std::vector<Tri>& tris, int vertex_count,
                          const std::vector<Vec3>& positions, double side) {
  std::unordered_map<std::uint64_t, double> lengths;
  for (const Tri& t : tris) {
    for (int c = 0; c < 3; ++c) {
      int u = t[c], v = t[(c + 1) % 3];
      std::uint64_t key = edge_key(u, v);
      if (lengths.count(key)) continue;
      double dx = positions[v][0] - positions[u][0];
      double dy = positions[v][1] - positions[u][1];
      dx -= side * std::round(dx / side);
      dy -= side * std::round(dy / side);
      lengths[key] = std::hypot(dx, dy);
    }
  }
  return SurfaceMesh(vertex_count, tris, std::move(lengths), positions);
}

}  // namespace

SurfaceMesh flat_disc(double radius, int level, std::uint64_t seed) {
  if (radius <= 0.0 || level < 0) throw std::invalid_argument("flat_disc: bad parameters");
  const int L = 1 << level;
  const double jitter = 1e-7 * radius;
  auto place = [&](int ring, double angle) -> Vec3 {
    double r = radius * ring / L;
    if (ring > 0 && ring < L)
      r += jitter * jitter_unit(seed, static_cast<std::uint64_t>(ring) * 131 +
                                          static_cast<std::uint64_t>(angle * 1e6), 1);
    return {r * std::cos(angle), r * std::sin(angle), 0.0};
  };
  return polar_cap_mesh(L, seed, jitter, place);
}

SurfaceMesh spherical_cap(double angle, int level, std::uint64_t seed) {
  if (angle <= 0.0 || angle > kPi || level < 0)
    throw std::invalid_argument("spherical_cap: bad parameters");
  const int L = 1 << level;
  const double jitter = 1e-7;
  auto place = [&](int ring, double azimuth) -> Vec3 {
    double polar = angle * ring / L;
    if (ring > 0 && ring < L)
      polar += jitter * jitter_unit(seed, static_cast<std::uint64_t>(ring) * 977 +
                                              static_cast<std::uint64_t>(azimuth * 1e6), 2);
    return {std::sin(polar) * std::cos(azimuth),
            std::sin(polar) * std::sin(azimuth), std::cos(polar)};
  };
  return polar_cap_mesh(L, seed, jitter, place);
}

SurfaceMesh flat_annulus(double circumference, double width, int level,
                         std::uint64_t seed) {
  if (circumference <= 0.0 || width <= 0.0 || level < 0)
    throw std::invalid_argument("flat_annulus: bad parameters");
  const int rows = 1 << level;
  int cols = std::max(8, static_cast<int>(std::lround(circumference * rows / width)));
  cols = (cols + 3) / 4 * 4;

  const double dx = circumference / cols;
  const double dy = width / rows;
  const double eps = 1e-7 * std::min(dx, dy);
  auto vid = [&](int i, int j) { return i * cols + (j % cols + cols) % cols; };

  // Planar chart coordinates (x wraps); jitter interior rows only.
  std::vector<double> px(static_cast<std::size_t>(rows + 1) * cols);
  std::vector<double> py(px.size());
  std::vector<Vec3> positions(px.size());
  const double R = circumference / kTau;
  for (int i = 0; i <= rows; ++i) {
    for (int j = 0; j < cols; ++j) {
      int v = vid(i, j);
      double x = j * dx, y = i * dy;
      if (i > 0 && i < rows) {
        x += eps * jitter_unit(seed, v, 3);
        y += eps * jitter_unit(seed, v, 4);
      }
      px[v] = x;
      py[v] = y;
      double az = x / R;
      positions[v] = {R * std::cos(az), R * std::sin(az), y};
    }
  }

  std::vector<Tri> tris;
  std::unordered_map<std::uint64_t, double> lengths;
  auto note = [&](int u, int v, double wrap_dx) {
    std::uint64_t key = edge_key(u, v);
    if (lengths.count(key)) return;
    double ddx = px[v] - px[u] + wrap_dx;
    double ddy = py[v] - py[u];
    lengths[key] = std::sqrt(ddx * ddx + ddy * ddy);
  };
  for (int i = 0; i < rows; ++i) {
    for (int j = 0; j < cols; ++j) {
      int a = vid(i, j), b = vid(i, j + 1), c = vid(i + 1, j + 1), d = vid(i + 1, j);
      bool wrap = (j + 1 == cols);
      double wdx = wrap ? circumference : 0.0;
      tris.push_back({a, b, c});
      tris.push_back({a, c, d});
      note(a, b, wdx);
      note(b, c, 0.0);
      note(a, c, wdx);
      note(a, d, 0.0);
      note(d, c, wdx);
    }
  }
  const int vertex_count = static_cast<int>(positions.size());
  return SurfaceMesh(vertex_count, std::move(tris), std::move(lengths),
                     std::move(positions));
}

// Subdivide the star of vertex x so that it gains many distinct outgoing
// directions: every link edge receives m interior points, fanned to x on
// one side and to the opposite corner on the other.  A degree-6 basepoint
// cannot keep bouquet loops and boundary minimizers apart (two loops
// already consume four of its six children); a fanned basepoint mirrors
// the smooth picture where directions at x form a whole circle.
SurfaceMesh fan_vertex_star(const SurfaceMesh& mesh, int x, int m) {
  if (mesh.is_boundary_vertex(x))
    throw std::invalid_argument("fan_vertex_star: interior vertex required");

  std::unordered_map<std::uint64_t, double> lengths;
  for (int e = 0; e < mesh.edge_count(); ++e)
    lengths[edge_key(mesh.edges()[e][0], mesh.edges()[e][1])] =
        mesh.edge_length(e);

  std::vector<Vec3> positions = mesh.positions();
  int next_id = mesh.vertex_count();

  // New points per link edge, keyed by edge id, ordered from the lower
  // endpoint.
  std::unordered_map<int, std::vector<int>> edge_points;
  std::vector<bool> drop_face(mesh.face_count(), false);
  std::vector<Tri> added;

  std::vector<int> fan = mesh.vertex_fan(x);
  for (int a : fan) {
    int face = mesh.face_with_directed_edge(x, a);
    if (face < 0) continue;
    const Tri& t = mesh.triangles()[face];
    int c = t[0] == x ? 0 : (t[1] == x ? 1 : 2);
    int A = t[(c + 1) % 3], B = t[(c + 2) % 3];
    int e = mesh.edge_id(A, B);
    if (mesh.is_boundary_edge(e)) continue;  // keep such faces untouched
    {
      int other = mesh.edge_faces(e)[0] == face ? mesh.edge_faces(e)[1]
                                                : mesh.edge_faces(e)[0];
      const Tri& g = mesh.triangles()[other];
      if (g[0] == x || g[1] == x || g[2] == x) continue;
    }

    // Points along A->B at fractions i/(m+1).
    std::vector<int>& pts = edge_points[e];
    double lab = mesh.edge_length(A, B);
    double lxa = mesh.edge_length(x, A);
    double lxb = mesh.edge_length(x, B);
    // Chart with x at the origin, A on the positive axis.
    double ax = lxa, ay = 0.0;
    double bx = (lxa * lxa + lxb * lxb - lab * lab) / (2.0 * lxa);
    double by2 = lxb * lxb - bx * bx;
    double by = by2 > 0.0 ? std::sqrt(by2) : 0.0;
    pts.resize(m);
    for (int i = 1; i <= m; ++i) {
      double t01 = static_cast<double>(i) / (m + 1);
      int id = next_id++;
      pts[i - 1] = id;
      double px = ax + t01 * (bx - ax), py = ay + t01 * (by - ay);
      lengths[edge_key(x, id)] = std::hypot(px, py);
      if (!positions.empty()) {
        Vec3 pa = mesh.positions()[A], pb = mesh.positions()[B];
        positions.push_back({pa[0] + t01 * (pb[0] - pa[0]),
                             pa[1] + t01 * (pb[1] - pa[1]),
                             pa[2] + t01 * (pb[2] - pa[2])});
      }
    }
    // Chain lengths along the split edge.
    int prev = A;
    for (int i = 1; i <= m + 1; ++i) {
      int cur = i <= m ? pts[i - 1] : B;
      lengths[edge_key(prev, cur)] = lab / (m + 1);
      prev = cur;
    }
    // Fan on the x side.
    drop_face[face] = true;
    prev = A;
    for (int i = 1; i <= m + 1; ++i) {
      int cur = i <= m ? pts[i - 1] : B;
      added.push_back({x, prev, cur});
      prev = cur;
    }

    // Fan on the far side from the opposite corner.
    int other = mesh.edge_faces(e)[0] == face ? mesh.edge_faces(e)[1]
                                              : mesh.edge_faces(e)[0];
    const Tri& g = mesh.triangles()[other];
    int gc = -1;
    for (int k = 0; k < 3; ++k)
      if (g[k] != A && g[k] != B) gc = g[k];
    double lca = mesh.edge_length(gc, A);
    double lcb = mesh.edge_length(gc, B);
    double cax = lca, cay = 0.0;
    double cbx = (lca * lca + lcb * lcb - lab * lab) / (2.0 * lca);
    double cby2 = lcb * lcb - cbx * cbx;
    double cby = cby2 > 0.0 ? std::sqrt(cby2) : 0.0;
    for (int i = 1; i <= m; ++i) {
      double t01 = static_cast<double>(i) / (m + 1);
      double px = cax + t01 * (cbx - cax), py = cay + t01 * (cby - cay);
      lengths[edge_key(gc, pts[i - 1])] = std::hypot(px, py);
    }
    drop_face[other] = true;
    // The far face traverses the edge B->A.
    prev = B;
    for (int i = m; i >= 0; --i) {
      int cur = i >= 1 ? pts[i - 1] : A;
      added.push_back({gc, prev, cur});
      prev = cur;
    }
  }

  std::vector<Tri> tris;
  tris.reserve(mesh.face_count() + added.size());
  for (int f = 0; f < mesh.face_count(); ++f)
    if (!drop_face[f]) tris.push_back(mesh.triangles()[f]);
  tris.insert(tris.end(), added.begin(), added.end());
  return SurfaceMesh(next_id, std::move(tris), std::move(lengths),
                     std::move(positions));
}

SurfaceMesh coarse_torus_with_hole(int K, double side, std::uint64_t seed) {
  if (K < 4 || side <= 0.0)
    throw std::invalid_argument("coarse_torus_with_hole: bad parameters");
  GridTorus g = grid_torus(K);
  TorusPiece piece = remove_stars(g, {{K / 2, K / 2}});
  std::vector<Tri> tris = piece.tris;
  std::vector<int> map = compact_ids(tris, K * K);
  int count = 0;
  for (int v : map)
    if (v >= 0) ++count;
  const double cell = side / K;
  std::vector<Vec3> positions(count);
  for (int i = 0; i < K; ++i)
    for (int j = 0; j < K; ++j) {
      int nv = map[g.vid(i, j)];
      if (nv >= 0) positions[nv] = grid_position(i, j, cell, 0.15, seed, K);
    }
  return jitter_lengths(assemble_flat(tris, count, positions, side), seed, 2e-7);
}

SurfaceMesh torus_with_hole(double side, int level, std::uint64_t seed) {
  if (side <= 0.0 || level < 1)
    throw std::invalid_argument("torus_with_hole: bad parameters");
  const int K = 4 << level;
  GridTorus g = grid_torus(K);
  TorusPiece piece = remove_stars(g, {{K / 2, K / 2}});

  std::vector<Tri> tris = piece.tris;
  std::vector<int> map = compact_ids(tris, K * K);
  int count = 0;
  for (int v : map)
    if (v >= 0) ++count;
  const double cell = side / K;
  std::vector<Vec3> positions(count);
  for (int i = 0; i < K; ++i)
    for (int j = 0; j < K; ++j) {
      int nv = map[g.vid(i, j)];
      if (nv >= 0) positions[nv] = grid_position(i, j, cell, 0.15, seed, K);
    }

  SurfaceMesh coarse = assemble_flat(tris, count, positions, side);
  SurfaceMesh fine =
      jitter_lengths(refine(coarse, 7), seed, 2e-7);  // hole becomes a 48-gon
  // Fan the natural bouquet basepoint so loops and minimizers can leave it
  // in genuinely distinct directions.
  return fan_vertex_star(fine, farthest_interior_vertex(fine), 5);
}

SurfaceMesh genus2_with_hole(double side, int level, std::uint64_t seed) {
  if (side <= 0.0 || level < 1)
    throw std::invalid_argument("genus2_with_hole: bad parameters");
  const int K = 4 << level;
  GridTorus g = grid_torus(K);

  // Piece A carries only the gluing hexagon at (K/2, K/2); piece B carries
  // the gluing hexagon and the boundary hole at (0, 0).  The bouquet
  // basepoint lives on piece B at (K/4, 3K/4): seen from there, the hole
  // and the junction lie in opposite diagonal directions while the torus-B
  // wrap loops leave along the axes, so boundary minimizers, handle loops,
  // and junction arcs separate cleanly at the basepoint.
  TorusPiece piece_a = remove_stars(g, {{K / 2, K / 2}});
  TorusPiece piece_b = remove_stars(g, {{K / 2, K / 2}, {0, 0}});

  std::vector<Tri> tris_a = piece_a.tris;
  std::vector<int> map_a = compact_ids(tris_a, K * K);
  int count_a = 0;
  for (int v : map_a)
    if (v >= 0) ++count_a;

  // Glue: identify B's hexagon with A's in reversed boundary order.
  std::vector<int> hex_a = star_link_loop(g, K / 2, K / 2);
  std::vector<int> hex_b = hex_a;  // same grid coordinates on piece B
  std::vector<int> map_b(K * K, -1);
  for (int i = 0; i < 6; ++i)
    map_b[hex_b[i]] = map_a[hex_a[(6 - i) % 6]];

  std::vector<Tri> tris_b = piece_b.tris;
  int next = count_a;
  for (Tri& t : tris_b)
    for (int c = 0; c < 3; ++c) {
      if (map_b[t[c]] < 0) map_b[t[c]] = next++;
      t[c] = map_b[t[c]];
    }

  const double cell = side / K;
  std::vector<Vec3> positions(next);
  for (int i = 0; i < K; ++i)
    for (int j = 0; j < K; ++j) {
      int va = map_a[g.vid(i, j)];
      if (va >= 0) positions[va] = grid_position(i, j, cell, 0.15, seed, K);
      int vb = map_b[g.vid(i, j)];
      if (vb >= count_a)
        positions[vb] =
            grid_position(i, j, cell, 0.15, seed ^ 0xb0b0, K, side * 1.25);
    }

  std::vector<Tri> tris = std::move(tris_a);
  tris.insert(tris.end(), tris_b.begin(), tris_b.end());
  SurfaceMesh coarse = assemble_flat(tris, next, positions, side);

  MeshDiagnostics diag = coarse.validate();
  if (!diag.ok || coarse.genus() != 2)
    throw std::logic_error("genus2_with_hole: construction self-check failed");

  SurfaceMesh fine = jitter_lengths(refine(coarse, 7), seed, 2e-7);
  int basepoint = map_b[g.vid(K / 4, 3 * K / 4)];
  return fan_vertex_star(fine, basepoint, 5);
}

SurfaceMesh generate(const std::string& name, const GeneratorParams& p) {
  if (name == "flat_disc") return flat_disc(p.radius, p.level, p.seed);
  if (name == "spherical_cap") return spherical_cap(p.angle, p.level, p.seed);
  if (name == "flat_annulus")
    return flat_annulus(p.circumference, p.width, p.level, p.seed);
  if (name == "torus_with_hole") return torus_with_hole(p.side, p.level, p.seed);
  if (name == "genus2_with_hole")
    return genus2_with_hole(p.side, p.level, p.seed);
  throw std::invalid_argument("unknown generator: " + name);
}

}  // namespace fillarea
