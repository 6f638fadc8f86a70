#include "fillarea/bouquet.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <limits>
#include <queue>
#include <random>
#include <set>
#include <stdexcept>
#include <tuple>

#include "fillarea/geodesics.hpp"

namespace fillarea {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

std::vector<bool> loop_edge_mask(const SurfaceMesh& mesh,
                                 const VertexPath& loop) {
  std::vector<bool> mask(mesh.edge_count(), false);
  for (std::size_t i = 0; i + 1 < loop.vertices.size(); ++i) {
    int e = mesh.edge_id(loop.vertices[i], loop.vertices[i + 1]);
    if (e < 0) throw std::invalid_argument("loop leaves the mesh");
    mask[e] = true;
  }
  return mask;
}

// Face labels of the dual graph with the loop's dual edges removed:
// 1 component means the loop is nonseparating.
std::vector<int> dual_sides(const SurfaceMesh& mesh,
                            const std::vector<bool>& cut, int* count) {
  std::vector<int> label(mesh.face_count(), -1);
  int components = 0;
  for (int seed = 0; seed < mesh.face_count(); ++seed) {
    if (label[seed] >= 0) continue;
    label[seed] = components;
    std::queue<int> queue;
    queue.push(seed);
    while (!queue.empty()) {
      int f = queue.front();
      queue.pop();
      const Tri& t = mesh.triangles()[f];
      for (int c = 0; c < 3; ++c) {
        int e = mesh.edge_id(t[c], t[(c + 1) % 3]);
        if (cut[e]) continue;
        for (int g : mesh.edge_faces(e)) {
          if (g >= 0 && label[g] < 0) {
            label[g] = components;
            queue.push(g);
          }
        }
      }
    }
    ++components;
  }
  *count = components;
  return label;
}

}  // namespace

bool loop_is_noncontractible(const SurfaceMesh& mesh, const VertexPath& loop) {
  if (!loop.is_loop()) throw std::invalid_argument("not a loop");
  std::vector<bool> cut = loop_edge_mask(mesh, loop);
  int sides = 0;
  std::vector<int> label = dual_sides(mesh, cut, &sides);
  if (sides == 1) return true;  // nonseparating
  if (sides != 2) return false; // should not happen for a simple loop

  // The loop separates; it is contractible iff one side, cut out along its
  // own copy of the loop, is a disc: euler characteristic 1 and no piece of
  // the original boundary inside.
  std::set<int> loop_vertices(loop.vertices.begin(), loop.vertices.end());
  for (int side = 0; side < 2; ++side) {
    long faces = 0;
    std::set<int> side_vertices;
    std::set<int> side_edges;
    for (int f = 0; f < mesh.face_count(); ++f) {
      if (label[f] != side) continue;
      ++faces;
      const Tri& t = mesh.triangles()[f];
      for (int c = 0; c < 3; ++c) {
        side_vertices.insert(t[c]);
        side_edges.insert(mesh.edge_id(t[c], t[(c + 1) % 3]));
      }
    }
    long euler = static_cast<long>(side_vertices.size()) -
                 static_cast<long>(side_edges.size()) + faces;
    bool touches_mesh_boundary = false;
    for (int e : side_edges)
      if (mesh.is_boundary_edge(e)) touches_mesh_boundary = true;
    if (euler == 1 && !touches_mesh_boundary) return false;  // disc side
  }
  return true;
}

VertexPath shortest_noncontractible_loop(const SurfaceMesh& mesh, int x) {
  if (x < 0 || x >= mesh.vertex_count())
    throw std::invalid_argument("basepoint out of range");
  if (mesh.is_boundary_vertex(x))
    throw std::invalid_argument("basepoint must be interior");
  // rank H1 = 2G + b - 1 = E - V - F + 2 vanishes exactly when simply
  // connected.
  int rank = mesh.edge_count() - mesh.vertex_count() - mesh.face_count() + 2;
  if (rank == 0) throw std::runtime_error("no noncontractible loop");

  DistanceField field = distance_field(mesh, x, 0);

  struct Candidate {
    double length;
    int u, v;
  };
  std::vector<Candidate> candidates;
  for (int e = 0; e < mesh.edge_count(); ++e) {
    int u = mesh.edges()[e][0], v = mesh.edges()[e][1];
    if ((field.pred[u].is_vertex() && field.pred[u].vertex == v) ||
        (field.pred[v].is_vertex() && field.pred[v].vertex == u))
      continue;  // tree edge
    candidates.push_back({field.dist[u] + mesh.edge_length(e) + field.dist[v],
                          u, v});
  }
  std::sort(candidates.begin(), candidates.end(),
            [](const Candidate& a, const Candidate& b) {
              if (a.length != b.length) return a.length < b.length;
              return std::pair(a.u, a.v) < std::pair(b.u, b.v);
            });

  auto tree_path_to = [&](int v) {
    std::vector<int> path;  // from x to v
    int cur = v;
    while (cur != x) {
      path.push_back(cur);
      cur = field.pred[cur].vertex;
    }
    path.push_back(x);
    std::reverse(path.begin(), path.end());
    return path;
  };

  for (const Candidate& cand : candidates) {
    std::vector<int> to_u = tree_path_to(cand.u);
    std::vector<int> to_v = tree_path_to(cand.v);
    // The two branches may only share the basepoint.
    std::set<int> seen(to_u.begin(), to_u.end());
    bool simple = true;
    for (std::size_t i = 1; i < to_v.size(); ++i)
      if (seen.count(to_v[i])) simple = false;
    if (!simple) continue;

    VertexPath loop;
    loop.vertices = to_u;
    for (std::size_t i = to_v.size(); i-- > 0;) loop.vertices.push_back(to_v[i]);
    bool interior = true;
    for (int v : loop.vertices)
      if (mesh.is_boundary_vertex(v)) interior = false;
    if (!interior) continue;

    loop.length = cand.length;
    if (loop_is_noncontractible(mesh, loop)) return loop;
  }
  throw std::runtime_error("no noncontractible loop");
}

VertexPath shortest_intercopy_arc(const SurfaceMesh& cut_mesh, int copy_a,
                                  int copy_b) {
  if (copy_a == copy_b) throw std::invalid_argument("copies must differ");
  std::vector<bool> forbidden(cut_mesh.vertex_count(), false);
  for (int v = 0; v < cut_mesh.vertex_count(); ++v)
    forbidden[v] = cut_mesh.is_boundary_vertex(v);
  VertexPath arc =
      constrained_shortest_path(cut_mesh, copy_a, copy_b, forbidden);
  if (arc.vertices.empty())
    throw std::runtime_error("cut disconnected surface");
  return arc;
}

namespace {

StageAudit audit_stage(int stage, bool loop_step, const VertexPath& path,
                       const SurfaceMesh& after) {
  StageAudit a;
  a.stage = stage;
  a.loop_step = loop_step;
  a.path = path;
  a.vertices = after.vertex_count();
  a.edges = after.edge_count();
  a.faces = after.face_count();
  a.euler = after.euler_characteristic();
  a.boundary_components = static_cast<int>(after.boundary_loops().size());
  a.genus = after.genus();
  a.area = after.total_area();
  return a;
}

std::vector<int> map_path(const VertexPath& path,
                          const std::vector<int>& to_original) {
  std::vector<int> out;
  out.reserve(path.vertices.size());
  for (int v : path.vertices) out.push_back(to_original[v]);
  return out;
}

}  // namespace

namespace {

struct CutState {
  SurfaceMesh mesh;
  std::vector<int> to_orig;  // current vertex -> original vertex
};

std::vector<int> state_copies(const CutState& state, int x) {
  std::vector<int> copies;
  for (int v = 0; v < state.mesh.vertex_count(); ++v)
    if (state.to_orig[v] == x) copies.push_back(v);
  return copies;
}

CutState apply_cut(const CutState& state, const VertexPath& path) {
  CutResult cut = cut_along(state.mesh, path);
  CutState next{std::move(cut.mesh), {}};
  next.to_orig.resize(next.mesh.vertex_count());
  for (int v = 0; v < next.mesh.vertex_count(); ++v)
    next.to_orig[v] = state.to_orig[cut.vertex_origin[v]];
  return next;
}

// Simple interior loops through x from the tree-path + edge family,
// shortest first, certified nonseparating by dual connectivity.
std::vector<VertexPath> nonseparating_loops(const SurfaceMesh& mesh, int x,
                                            std::size_t limit) {
  DistanceField field = distance_field(mesh, x, 0);
  struct Candidate {
    double length;
    int u, v;
  };
  std::vector<Candidate> raw;
  for (int e = 0; e < mesh.edge_count(); ++e) {
    int u = mesh.edges()[e][0], v = mesh.edges()[e][1];
    if ((field.pred[u].is_vertex() && field.pred[u].vertex == v) ||
        (field.pred[v].is_vertex() && field.pred[v].vertex == u))
      continue;
    raw.push_back({field.dist[u] + mesh.edge_length(e) + field.dist[v], u, v});
  }
  std::sort(raw.begin(), raw.end(), [](const Candidate& a, const Candidate& b) {
    if (a.length != b.length) return a.length < b.length;
    return std::pair(a.u, a.v) < std::pair(b.u, b.v);
  });

  std::vector<VertexPath> certified;
  for (const Candidate& cand : raw) {
    if (certified.size() >= limit) break;
    std::vector<int> to_u, to_v;
    for (int cv = cand.u; cv != x; cv = field.pred[cv].vertex)
      to_u.push_back(cv);
    to_u.push_back(x);
    std::reverse(to_u.begin(), to_u.end());
    for (int cv = cand.v; cv != x; cv = field.pred[cv].vertex)
      to_v.push_back(cv);
    std::set<int> seen(to_u.begin(), to_u.end());
    bool simple = true;
    for (int v : to_v)
      if (seen.count(v)) simple = false;
    if (!simple) continue;

    VertexPath loop;
    loop.vertices = to_u;
    loop.vertices.insert(loop.vertices.end(), to_v.begin(), to_v.end());
    loop.vertices.push_back(x);
    bool interior = true;
    for (int v : loop.vertices)
      if (mesh.is_boundary_vertex(v)) interior = false;
    if (!interior) continue;
    loop.length = cand.length;

    std::vector<bool> cut_ids = loop_edge_mask(mesh, loop);
    int sides = 0;
    dual_sides(mesh, cut_ids, &sides);
    if (sides == 1) certified.push_back(std::move(loop));
  }
  return certified;
}

// Arcs between distinct basepoint copies, interior away from the
// endpoints, noncontractible relative to the boundary (dual-connected
// after blocking), shortest first.  The family is tree-path + bridging
// edge + tree-path over constrained trees rooted at the copies -- the
// bridging edge supplies the homotopy variety, exactly as in the loop
// family.  Candidates are deduplicated by their exit children so that a
// scar-hugging shortest route cannot crowd out variants that leave the
// basepoint sectors usable.
std::vector<VertexPath> genus_reducing_arcs(const SurfaceMesh& mesh,
                                            const std::vector<int>& copies,
                                            std::size_t limit) {
  std::vector<bool> blocked(mesh.vertex_count(), false);
  for (int v = 0; v < mesh.vertex_count(); ++v)
    blocked[v] = mesh.is_boundary_vertex(v);

  std::vector<DistanceField> from_copy;
  for (int c : copies) {
    DistanceField field;
    field.source = c;
    field.dist.assign(mesh.vertex_count(), kInf);
    field.pred.resize(mesh.vertex_count());
    using Item = std::pair<double, int>;
    std::priority_queue<Item, std::vector<Item>, std::greater<Item>> heap;
    field.dist[c] = 0.0;
    heap.push({0.0, c});
    while (!heap.empty()) {
      auto [d, u] = heap.top();
      heap.pop();
      if (d > field.dist[u]) continue;
      for (int e : mesh.vertex_edges(u)) {
        int w = mesh.edges()[e][0] == u ? mesh.edges()[e][1]
                                        : mesh.edges()[e][0];
        if (blocked[w]) continue;
        double nd = d + mesh.edge_length(e);
        if (nd < field.dist[w]) {
          field.dist[w] = nd;
          field.pred[w].vertex = u;
          heap.push({nd, w});
        } else if (nd == field.dist[w] && u < field.pred[w].vertex) {
          field.pred[w].vertex = u;
        }
      }
    }
    from_copy.push_back(std::move(field));
  }

  struct Candidate {
    double length;
    int ci, cj;
    int u, v;
  };
  std::vector<Candidate> raw;
  for (std::size_t i = 0; i < copies.size(); ++i)
    for (std::size_t j = 0; j < copies.size(); ++j) {
      if (i == j) continue;
      for (int e = 0; e < mesh.edge_count(); ++e) {
        int u = mesh.edges()[e][0], v = mesh.edges()[e][1];
        if (blocked[u] || blocked[v]) continue;
        double len =
            from_copy[i].dist[u] + mesh.edge_length(e) + from_copy[j].dist[v];
        if (std::isfinite(len))
          raw.push_back({len, static_cast<int>(i), static_cast<int>(j), u, v});
      }
    }
  std::sort(raw.begin(), raw.end(), [](const Candidate& a, const Candidate& b) {
    if (a.length != b.length) return a.length < b.length;
    return std::tie(a.ci, a.cj, a.u, a.v) < std::tie(b.ci, b.cj, b.u, b.v);
  });

  std::vector<VertexPath> certified;
  std::set<std::vector<int>> seen_paths;
  std::map<std::array<int, 2>, int> per_exit;
  for (const Candidate& cand : raw) {
    if (certified.size() >= limit) break;
    std::vector<int> head, tail;
    for (int cv = cand.u; cv >= 0; cv = from_copy[cand.ci].pred[cv].vertex)
      head.push_back(cv);
    std::reverse(head.begin(), head.end());
    for (int cv = cand.v; cv >= 0; cv = from_copy[cand.cj].pred[cv].vertex)
      tail.push_back(cv);
    std::set<int> seen(head.begin(), head.end());
    bool simple = true;
    for (int v : tail)
      if (seen.count(v)) simple = false;
    if (!simple) continue;

    VertexPath arc;
    arc.vertices = head;
    arc.vertices.insert(arc.vertices.end(), tail.begin(), tail.end());
    arc.length = cand.length;
    if (arc.vertices.size() < 3) continue;
    if (seen_paths.count(arc.vertices)) continue;

    // At most two candidates per (exit child, approach child) pair.
    std::array<int, 2> sig = {arc.vertices[1],
                              arc.vertices[arc.vertices.size() - 2]};
    if (per_exit[sig] >= 2) continue;

    std::vector<bool> cut_ids = loop_edge_mask(mesh, arc);
    int sides = 0;
    dual_sides(mesh, cut_ids, &sides);
    if (sides != 1) continue;
    ++per_exit[sig];
    seen_paths.insert(arc.vertices);
    certified.push_back(std::move(arc));
  }
  return certified;
}

// Even-step partner: shortest interior arc joining basepoint copies on two
// different boundary components.  Empty when the copies are grouped on one
// component or every route is sealed off by earlier scars.
VertexPath partner_arc(const SurfaceMesh& mesh, const std::vector<int>& copies) {
  std::vector<BoundaryLoop> loops = mesh.boundary_loops();
  std::vector<std::vector<int>> groups;
  for (const BoundaryLoop& loop : loops) {
    std::set<int> on_loop(loop.vertices.begin(), loop.vertices.end());
    std::vector<int> group;
    for (int c : copies)
      if (on_loop.count(c)) group.push_back(c);
    if (!group.empty()) groups.push_back(group);
  }
  if (groups.size() != 2) return {};

  std::vector<bool> forbidden(mesh.vertex_count(), false);
  for (int v = 0; v < mesh.vertex_count(); ++v)
    forbidden[v] = mesh.is_boundary_vertex(v);
  VertexPath best;
  for (int a : groups[0])
    for (int b : groups[1]) {
      VertexPath arc = constrained_shortest_path(mesh, a, b, forbidden);
      if (!arc.vertices.empty() &&
          (best.vertices.empty() || arc.length < best.length))
        best = arc;
    }
  return best;
}

}  // namespace

Bouquet build_bouquet(const SurfaceMesh& mesh, int x) {
  const int G = mesh.genus();
  if (G < 1) throw std::invalid_argument("nothing to cut");
  if (mesh.is_boundary_vertex(x))
    throw std::invalid_argument("basepoint must be interior");

  Bouquet bouquet;
  bouquet.basepoint = x;

  CutState state{mesh, {}};
  state.to_orig.resize(mesh.vertex_count());
  for (int v = 0; v < mesh.vertex_count(); ++v) state.to_orig[v] = v;

  constexpr std::size_t kCandidateBudget = 24;

  for (int round = 1; round <= G; ++round) {
    int genus_before = state.mesh.genus();
    int b_before = static_cast<int>(state.mesh.boundary_loops().size());

    // Odd step candidates: the first round cuts a nonseparating loop
    // through x; later rounds cut a genus-reducing arc between copies.
    std::vector<VertexPath> odd_candidates =
        round == 1 ? nonseparating_loops(state.mesh, x, kCandidateBudget)
                   : genus_reducing_arcs(state.mesh, state_copies(state, x),
                                         kCandidateBudget);

    // A candidate commits only if its even-step partner exists; earlier
    // scars can seal off every route from a copy, in which case the next
    // certified candidate is tried.
    bool committed = false;
    int fail_topology = 0, fail_partner = 0;
    for (const VertexPath& odd : odd_candidates) {
      CutState after_odd = apply_cut(state, odd);
      int comps = 0;
      after_odd.mesh.connected_component_labels(&comps);
      if (comps != 1) continue;
      if (after_odd.mesh.genus() != genus_before - 1) {
        ++fail_topology;
        continue;
      }
      int b_after = static_cast<int>(after_odd.mesh.boundary_loops().size());
      if (b_after != b_before + (round == 1 ? 2 : 1)) {
        ++fail_topology;
        continue;
      }

      VertexPath even = partner_arc(after_odd.mesh, state_copies(after_odd, x));
      if (even.vertices.empty()) {
        ++fail_partner;
        continue;
      }
      CutState after_even = apply_cut(after_odd, even);
      int comps2 = 0;
      after_even.mesh.connected_component_labels(&comps2);
      if (comps2 != 1) continue;
      if (after_even.mesh.genus() != genus_before - 1) continue;
      if (static_cast<int>(after_even.mesh.boundary_loops().size()) !=
          b_after - 1)
        continue;

      VertexPath odd_orig, even_orig;
      odd_orig.vertices = map_path(odd, state.to_orig);
      odd_orig.length = odd.length;
      even_orig.vertices = map_path(even, after_odd.to_orig);
      even_orig.length = even.length;
      bouquet.loops.push_back(odd_orig);
      bouquet.loops.push_back(even_orig);
      bouquet.cut_log.push_back(
          audit_stage(2 * round - 1, true, odd, after_odd.mesh));
      bouquet.cut_log.push_back(
          audit_stage(2 * round, false, even, after_even.mesh));

      state = std::move(after_even);
      committed = true;
      break;
    }
    if (!committed)
      throw std::runtime_error(
          "round " + std::to_string(round) + ": no cut pair completes (" +
          std::to_string(odd_candidates.size()) + " candidates, " +
          std::to_string(fail_topology) + " wrong topology, " +
          std::to_string(fail_partner) + " without partner)");
  }

  MeshDiagnostics final_diag = state.mesh.validate();
  if (!final_diag.ok || state.mesh.genus() != 0 ||
      final_diag.boundary_components != 2)
    throw std::runtime_error("final cut complement is not an annulus");
  return bouquet;
}

BouquetCertificate verify_bouquet(const SurfaceMesh& mesh,
                                  const Bouquet& bouquet, int probe_count,
                                  std::uint64_t seed) {
  BouquetCertificate cert;

  // (a) Replay the recorded cuts and audit the result.
  SurfaceMesh cur = mesh;
  bool replay_ok = true;
  for (const StageAudit& stage : bouquet.cut_log) {
    try {
      CutResult cut = cut_along(cur, stage.path);
      cur = std::move(cut.mesh);
    } catch (const std::exception&) {
      replay_ok = false;
      break;
    }
    cert.replay_log.push_back(
        audit_stage(stage.stage, stage.loop_step, stage.path, cur));
  }
  if (replay_ok) {
    int comps = 0;
    cur.connected_component_labels(&comps);
    cert.annulus_ok = comps == 1 && cur.genus() == 0 &&
                      cur.boundary_loops().size() == 2;
  }

  // (b) Pairwise disjointness away from the basepoint.
  cert.disjoint_ok = true;
  for (std::size_t i = 0; i < bouquet.loops.size(); ++i) {
    std::set<int> a(bouquet.loops[i].vertices.begin(),
                    bouquet.loops[i].vertices.end());
    for (std::size_t j = i + 1; j < bouquet.loops.size(); ++j)
      for (int v : bouquet.loops[j].vertices)
        if (v != bouquet.basepoint && a.count(v)) cert.disjoint_ok = false;
  }

  // (c) Probe minimizers from the basepoint to random boundary vertices.
  std::vector<int> boundary_pool;
  for (const BoundaryLoop& loop : mesh.boundary_loops())
    boundary_pool.insert(boundary_pool.end(), loop.vertices.begin(),
                         loop.vertices.end());
  std::mt19937_64 rng(seed);
  std::vector<std::set<int>> loop_sets;
  for (const VertexPath& loop : bouquet.loops)
    loop_sets.emplace_back(loop.vertices.begin(), loop.vertices.end());
  DistanceField field = distance_field(mesh, bouquet.basepoint, 0);
  cert.probes_total = probe_count;
  for (int k = 0; k < probe_count; ++k) {
    int q = boundary_pool[rng() % boundary_pool.size()];
    VertexPath nu = shortest_path(mesh, field, q);
    bool clean = true;
    for (const std::set<int>& loop : loop_sets)
      for (int v : nu.vertices)
        if (v != bouquet.basepoint && loop.count(v)) clean = false;
    if (!clean) ++cert.probes_failed;
  }
  cert.probes_ok = cert.probes_failed == 0;
  cert.pass = cert.annulus_ok && cert.disjoint_ok && cert.probes_ok;
  return cert;
}

namespace {

std::vector<double> boundary_distances(const SurfaceMesh& mesh) {
  std::vector<double> dist(mesh.vertex_count(), kInf);
  using Item = std::pair<double, int>;
  std::priority_queue<Item, std::vector<Item>, std::greater<Item>> heap;
  for (int v = 0; v < mesh.vertex_count(); ++v) {
    if (mesh.is_boundary_vertex(v)) {
      dist[v] = 0.0;
      heap.push({0.0, v});
    }
  }
  while (!heap.empty()) {
    auto [d, u] = heap.top();
    heap.pop();
    if (d > dist[u]) continue;
    for (int e : mesh.vertex_edges(u)) {
      int w = mesh.edges()[e][0] == u ? mesh.edges()[e][1] : mesh.edges()[e][0];
      double nd = d + mesh.edge_length(e);
      if (nd < dist[w]) {
        dist[w] = nd;
        heap.push({nd, w});
      }
    }
  }
  return dist;
}

}  // namespace

int farthest_interior_vertex(const SurfaceMesh& mesh) {
  std::vector<double> dist = boundary_distances(mesh);
  int best = -1;
  double best_dist = -1.0;
  for (int v = 0; v < mesh.vertex_count(); ++v)
    if (!mesh.is_boundary_vertex(v) && dist[v] > best_dist) {
      best_dist = dist[v];
      best = v;
    }
  if (best < 0) throw std::runtime_error("no interior vertex");
  return best;
}

int suggested_basepoint(const SurfaceMesh& mesh) {
  std::vector<double> dist = boundary_distances(mesh);
  int best = -1;
  std::pair<std::size_t, double> best_key{0, -1.0};
  for (int v = 0; v < mesh.vertex_count(); ++v) {
    if (mesh.is_boundary_vertex(v)) continue;
    std::pair<std::size_t, double> key{mesh.vertex_edges(v).size(), dist[v]};
    if (best < 0 || key > best_key) {
      best_key = key;
      best = v;
    }
  }
  if (best < 0) throw std::runtime_error("no interior vertex");
  return best;
}

}  // namespace fillarea
