#include "fillarea/mesh.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <queue>
#include <set>
#include <stdexcept>

namespace fillarea {

namespace {

double distance3(const Vec3& a, const Vec3& b) {
  double dx = a[0] - b[0], dy = a[1] - b[1], dz = a[2] - b[2];
  return std::sqrt(dx * dx + dy * dy + dz * dz);
}

// Numerically stable Heron form; expects a >= b >= c.
double heron(double a, double b, double c) {
  double t = (a + (b + c)) * (c - (a - b)) * (c + (a - b)) * (a + (b - c));
  if (t <= 0.0) return 0.0;
  return 0.25 * std::sqrt(t);
}

}  // namespace

SurfaceMesh::SurfaceMesh(std::vector<Vec3> positions, std::vector<Tri> triangles)
    : vertex_count_(static_cast<int>(positions.size())),
      triangles_(std::move(triangles)),
      positions_(std::move(positions)) {
  build_adjacency();
  for (std::size_t e = 0; e < edges_.size(); ++e)
    lengths_[e] = distance3(positions_[edges_[e][0]], positions_[edges_[e][1]]);
}

SurfaceMesh::SurfaceMesh(int vertex_count, std::vector<Tri> triangles,
                         std::unordered_map<std::uint64_t, double> lengths,
                         std::vector<Vec3> positions)
    : vertex_count_(vertex_count),
      triangles_(std::move(triangles)),
      positions_(std::move(positions)) {
  build_adjacency();
  for (std::size_t e = 0; e < edges_.size(); ++e) {
    auto it = lengths.find(edge_key(edges_[e][0], edges_[e][1]));
    if (it == lengths.end())
      throw std::invalid_argument("missing edge length");
    lengths_[e] = it->second;
  }
}

void SurfaceMesh::build_adjacency() {
  edges_.clear();
  edge_index_.clear();
  directed_face_.clear();
  for (std::size_t f = 0; f < triangles_.size(); ++f) {
    const Tri& t = triangles_[f];
    for (int c = 0; c < 3; ++c) {
      int u = t[c], v = t[(c + 1) % 3];
      if (u < 0 || u >= vertex_count_ || v < 0 || v >= vertex_count_)
        throw std::invalid_argument("triangle references unknown vertex");
      if (u == v) throw std::invalid_argument("degenerate triangle edge");
      std::uint64_t key = edge_key(u, v);
      auto it = edge_index_.find(key);
      int e;
      if (it == edge_index_.end()) {
        e = static_cast<int>(edges_.size());
        edge_index_.emplace(key, e);
        edges_.push_back({std::min(u, v), std::max(u, v)});
        edge_faces_.push_back({static_cast<int>(f), -1});
      } else {
        e = it->second;
        if (edge_faces_[e][1] >= 0)
          throw std::invalid_argument("non-manifold edge (more than two faces)");
        edge_faces_[e][1] = static_cast<int>(f);
      }
      // A repeated directed edge is an orientation conflict; keep the first
      // occurrence and let validate() report it.
      std::uint64_t dkey =
          (static_cast<std::uint64_t>(static_cast<std::uint32_t>(u)) << 32) |
          static_cast<std::uint32_t>(v);
      directed_face_.emplace(dkey, static_cast<int>(f));
    }
  }
  lengths_.assign(edges_.size(), 0.0);
  vertex_edges_.assign(vertex_count_, {});
  for (std::size_t e = 0; e < edges_.size(); ++e) {
    vertex_edges_[edges_[e][0]].push_back(static_cast<int>(e));
    vertex_edges_[edges_[e][1]].push_back(static_cast<int>(e));
  }
  boundary_vertex_.assign(vertex_count_, false);
  for (std::size_t e = 0; e < edges_.size(); ++e) {
    if (edge_faces_[e][1] < 0) {
      boundary_vertex_[edges_[e][0]] = true;
      boundary_vertex_[edges_[e][1]] = true;
    }
  }
}

int SurfaceMesh::edge_id(int u, int v) const {
  auto it = edge_index_.find(edge_key(u, v));
  return it == edge_index_.end() ? -1 : it->second;
}

double SurfaceMesh::edge_length(int u, int v) const {
  int e = edge_id(u, v);
  if (e < 0) throw std::invalid_argument("no such edge");
  return lengths_[e];
}

int SurfaceMesh::face_with_directed_edge(int u, int v) const {
  std::uint64_t dkey =
      (static_cast<std::uint64_t>(static_cast<std::uint32_t>(u)) << 32) |
      static_cast<std::uint32_t>(v);
  auto it = directed_face_.find(dkey);
  return it == directed_face_.end() ? -1 : it->second;
}

std::vector<int> SurfaceMesh::vertex_fan(int v) const {
  // A counterclockwise face (v,b,c) sweeps the corner at v from direction
  // v->b to v->c, so following (v,b) -> (v,c) steps counterclockwise.
  std::vector<int> fan;
  if (vertex_edges_[v].empty()) return fan;

  int start = -1;
  if (boundary_vertex_[v]) {
    for (int e : vertex_edges_[v]) {
      if (!is_boundary_edge(e)) continue;
      int w = edges_[e][0] == v ? edges_[e][1] : edges_[e][0];
      if (face_with_directed_edge(v, w) >= 0) {
        start = w;
        break;
      }
    }
    if (start < 0) return fan;  // pinched configuration; validate() reports it
  } else {
    int e = vertex_edges_[v][0];
    start = edges_[e][0] == v ? edges_[e][1] : edges_[e][0];
  }

  int cur = start;
  const std::size_t limit = vertex_edges_[v].size() + 1;
  for (std::size_t step = 0; step < limit; ++step) {
    fan.push_back(cur);
    int f = face_with_directed_edge(v, cur);
    if (f < 0) break;  // reached the trailing boundary edge
    const Tri& t = triangles_[f];
    int next = -1;
    for (int c = 0; c < 3; ++c)
      if (t[c] == v) next = t[(c + 2) % 3];
    if (next == cur || next < 0) break;
    if (next == start && !boundary_vertex_[v]) break;  // closed the cycle
    cur = next;
  }
  return fan;
}

double SurfaceMesh::corner_angle(int face, int v) const {
  const Tri& t = triangles_[face];
  int a = -1, b = -1;
  for (int c = 0; c < 3; ++c) {
    if (t[c] == v) {
      a = t[(c + 1) % 3];
      b = t[(c + 2) % 3];
    }
  }
  if (a < 0) throw std::invalid_argument("vertex not in face");
  double la = edge_length(v, a), lb = edge_length(v, b), lo = edge_length(a, b);
  double cosv = (la * la + lb * lb - lo * lo) / (2.0 * la * lb);
  cosv = std::clamp(cosv, -1.0, 1.0);
  return std::acos(cosv);
}

double SurfaceMesh::face_area(int face) const {
  const Tri& t = triangles_[face];
  double s[3] = {edge_length(t[0], t[1]), edge_length(t[1], t[2]),
                 edge_length(t[2], t[0])};
  std::sort(s, s + 3);
  return heron(s[2], s[1], s[0]);
}

double SurfaceMesh::total_area() const {
  double area = 0.0;
  for (int f = 0; f < face_count(); ++f) area += face_area(f);
  return area;
}

std::vector<int> SurfaceMesh::connected_component_labels(int* count) const {
  std::vector<int> label(vertex_count_, -1);
  int components = 0;
  for (int seed = 0; seed < vertex_count_; ++seed) {
    if (label[seed] >= 0) continue;
    label[seed] = components;
    std::queue<int> queue;
    queue.push(seed);
    while (!queue.empty()) {
      int v = queue.front();
      queue.pop();
      for (int e : vertex_edges_[v]) {
        int w = edges_[e][0] == v ? edges_[e][1] : edges_[e][0];
        if (label[w] < 0) {
          label[w] = components;
          queue.push(w);
        }
      }
    }
    ++components;
  }
  if (count) *count = components;
  return label;
}

MeshDiagnostics SurfaceMesh::validate() const {
  MeshDiagnostics d;
  d.vertices = vertex_count_;
  d.edges = edge_count();
  d.faces = face_count();
  d.euler = euler_characteristic();

  // Orientation: an interior edge must be traversed in opposite directions
  // by its two faces, i.e. no directed edge may appear twice.
  std::set<std::pair<int, int>> seen;
  for (const Tri& t : triangles_) {
    for (int c = 0; c < 3; ++c) {
      int u = t[c], v = t[(c + 1) % 3];
      if (!seen.insert({u, v}).second)
        d.failures.push_back("orientation conflict on edge " +
                             std::to_string(u) + "-" + std::to_string(v));
    }
  }

  for (int f = 0; f < face_count(); ++f) {
    const Tri& t = triangles_[f];
    if (t[0] == t[1] || t[1] == t[2] || t[0] == t[2]) {
      d.failures.push_back("degenerate triangle " + std::to_string(f));
      continue;
    }
    double s[3] = {edge_length(t[0], t[1]), edge_length(t[1], t[2]),
                   edge_length(t[2], t[0])};
    std::sort(s, s + 3);
    if (!(s[0] > 0.0) || s[0] + s[1] <= s[2])
      d.failures.push_back("triangle inequality violated in face " +
                           std::to_string(f));
  }

  // Vertex-level manifoldness: the counterclockwise fan must reach every
  // neighbor exactly once.
  for (int v = 0; v < vertex_count_; ++v) {
    if (vertex_edges_[v].empty()) {
      d.failures.push_back("isolated vertex " + std::to_string(v));
      continue;
    }
    std::vector<int> fan = vertex_fan(v);
    if (fan.size() != vertex_edges_[v].size())
      d.failures.push_back("non-manifold vertex " + std::to_string(v));
  }
  for (int v = 0; v < vertex_count_; ++v) {
    int boundary_edges = 0;
    for (int e : vertex_edges_[v])
      if (is_boundary_edge(e)) ++boundary_edges;
    if (boundary_edges != 0 && boundary_edges != 2)
      d.failures.push_back("irregular boundary at vertex " + std::to_string(v));
  }

  d.connected_components = 0;
  connected_component_labels(&d.connected_components);
  if (d.connected_components != 1)
    d.failures.push_back("mesh is not connected");

  if (d.failures.empty()) {
    d.boundary_components = static_cast<int>(boundary_loops().size());
    d.ok = true;
  } else {
    d.boundary_components = -1;
  }
  return d;
}

int SurfaceMesh::genus() const {
  int components = 0;
  connected_component_labels(&components);
  if (components != 1) throw std::runtime_error("inconsistent topology");
  int b = static_cast<int>(boundary_loops().size());
  int twice_genus = 2 - euler_characteristic() - b;
  if (twice_genus < 0 || twice_genus % 2 != 0)
    throw std::runtime_error("inconsistent topology");
  return twice_genus / 2;
}

std::vector<BoundaryLoop> SurfaceMesh::boundary_loops() const {
  // A boundary edge belongs to exactly one face; traversing it in that
  // face's direction keeps the surface on the left.
  std::unordered_map<int, int> next;  // u -> v along the boundary
  for (std::size_t e = 0; e < edges_.size(); ++e) {
    if (!is_boundary_edge(static_cast<int>(e))) continue;
    int u = edges_[e][0], v = edges_[e][1];
    if (face_with_directed_edge(u, v) >= 0)
      next[u] = v;
    else
      next[v] = u;
  }

  std::vector<BoundaryLoop> loops;
  std::set<int> visited;
  std::vector<int> starts;
  for (const auto& [u, v] : next) starts.push_back(u);
  std::sort(starts.begin(), starts.end());
  for (int start : starts) {
    if (visited.count(start)) continue;
    BoundaryLoop loop;
    int cur = start;
    do {
      loop.vertices.push_back(cur);
      visited.insert(cur);
      auto it = next.find(cur);
      if (it == next.end()) break;  // broken chain; validate() reports it
      cur = it->second;
    } while (cur != start);
    double total = 0.0;
    loop.params.resize(loop.vertices.size());
    for (std::size_t i = 0; i < loop.vertices.size(); ++i) {
      loop.params[i] = total;
      int a = loop.vertices[i];
      int b = loop.vertices[(i + 1) % loop.vertices.size()];
      total += edge_length(a, b);
    }
    loop.length = total;
    for (double& p : loop.params) p /= total;
    loops.push_back(std::move(loop));
  }
  return loops;
}

SurfaceMesh SurfaceMesh::scaled(double factor) const {
  if (!(factor > 0.0)) throw std::invalid_argument("scale must be positive");
  std::unordered_map<std::uint64_t, double> lengths;
  lengths.reserve(edges_.size());
  for (std::size_t e = 0; e < edges_.size(); ++e)
    lengths[edge_key(edges_[e][0], edges_[e][1])] = lengths_[e] * factor;
  return SurfaceMesh(vertex_count_, triangles_, std::move(lengths), positions_);
}

std::vector<int> CutResult::copies_of(int original_vertex) const {
  std::vector<int> out;
  for (std::size_t v = 0; v < vertex_origin.size(); ++v)
    if (vertex_origin[v] == original_vertex) out.push_back(static_cast<int>(v));
  return out;
}

CutResult cut_along(const SurfaceMesh& mesh, const VertexPath& path) {
  const std::vector<int>& pv = path.vertices;
  if (pv.size() < 2) throw std::invalid_argument("path too short");
  const bool loop = pv.front() == pv.back();

  // Simplicity and membership checks.
  {
    std::set<int> seen;
    std::size_t last = loop ? pv.size() - 1 : pv.size();
    for (std::size_t i = 0; i < last; ++i)
      if (!seen.insert(pv[i]).second)
        throw std::invalid_argument("non-simple path");
  }
  std::vector<int> cut_edges;
  for (std::size_t i = 0; i + 1 < pv.size(); ++i) {
    int e = mesh.edge_id(pv[i], pv[i + 1]);
    if (e < 0) throw std::invalid_argument("path leaves the mesh");
    if (mesh.is_boundary_edge(e))
      throw std::invalid_argument("cannot cut along a boundary edge");
    cut_edges.push_back(e);
  }
  if (loop) {
    for (std::size_t i = 0; i + 1 < pv.size(); ++i)
      if (mesh.is_boundary_vertex(pv[i]))
        throw std::invalid_argument("loop cut requires interior vertices");
  } else {
    if (!mesh.is_boundary_vertex(pv.front()) ||
        !mesh.is_boundary_vertex(pv.back()))
      throw std::invalid_argument("arc endpoints must be boundary vertices");
    for (std::size_t i = 1; i + 1 < pv.size(); ++i)
      if (mesh.is_boundary_vertex(pv[i]))
        throw std::invalid_argument("arc interior touches the boundary");
  }

  std::set<int> cut_edge_set(cut_edges.begin(), cut_edges.end());
  std::set<int> path_vertices(pv.begin(), pv.end());

  // For each path vertex, group its incident corners into sectors connected
  // across non-cut interior edges; each sector gets its own vertex copy.
  int new_vertex_count = mesh.vertex_count();
  std::vector<int> origin(mesh.vertex_count());
  for (int v = 0; v < mesh.vertex_count(); ++v) origin[v] = v;

  // sector id per (vertex, face) for path vertices
  std::unordered_map<std::int64_t, int> corner_vertex;
  auto corner_key = [](int v, int f) {
    return (static_cast<std::int64_t>(v) << 32) | static_cast<std::uint32_t>(f);
  };

  for (int v : path_vertices) {
    // Incident faces of v.
    std::vector<int> faces;
    for (int e : mesh.vertex_edges(v)) {
      for (int f : mesh.edge_faces(e)) {
        if (f >= 0 && std::find(faces.begin(), faces.end(), f) == faces.end())
          faces.push_back(f);
      }
    }
    std::sort(faces.begin(), faces.end());

    // Union corners across rotatable edges.
    std::unordered_map<int, int> face_slot;
    for (std::size_t i = 0; i < faces.size(); ++i)
      face_slot[faces[i]] = static_cast<int>(i);
    std::vector<int> parent(faces.size());
    for (std::size_t i = 0; i < parent.size(); ++i) parent[i] = static_cast<int>(i);
    std::function<int(int)> find = [&](int x) {
      while (parent[x] != x) x = parent[x] = parent[parent[x]];
      return x;
    };
    for (int e : mesh.vertex_edges(v)) {
      if (cut_edge_set.count(e) || mesh.is_boundary_edge(e)) continue;
      const auto& ef = mesh.edge_faces(e);
      int a = find(face_slot[ef[0]]), b = find(face_slot[ef[1]]);
      if (a != b) parent[a] = b;
    }

    // Deterministic sector numbering by smallest face id.
    std::unordered_map<int, int> sector_vertex;
    for (int f : faces) {
      int root = find(face_slot[f]);
      auto it = sector_vertex.find(root);
      int id;
      if (it == sector_vertex.end()) {
        if (sector_vertex.empty()) {
          id = v;  // first sector keeps the original id
        } else {
          id = new_vertex_count++;
          origin.push_back(v);
        }
        sector_vertex.emplace(root, id);
      } else {
        id = it->second;
      }
      corner_vertex[corner_key(v, f)] = id;
    }
  }

  // Rebuild faces with re-labelled corners, preserving face order.
  std::vector<Tri> new_tris = mesh.triangles();
  for (std::size_t f = 0; f < new_tris.size(); ++f) {
    for (int c = 0; c < 3; ++c) {
      int v = new_tris[f][c];
      if (!path_vertices.count(v)) continue;
      new_tris[f][c] = corner_vertex.at(corner_key(v, static_cast<int>(f)));
    }
  }

  std::unordered_map<std::uint64_t, double> new_lengths;
  for (const Tri& t : new_tris) {
    for (int c = 0; c < 3; ++c) {
      int u = t[c], w = t[(c + 1) % 3];
      new_lengths[edge_key(u, w)] = mesh.edge_length(origin[u], origin[w]);
    }
  }

  std::vector<Vec3> new_positions;
  if (mesh.has_positions()) {
    new_positions.resize(new_vertex_count);
    for (int v = 0; v < new_vertex_count; ++v)
      new_positions[v] = mesh.positions()[origin[v]];
  }

  CutResult result{SurfaceMesh(new_vertex_count, std::move(new_tris),
                               std::move(new_lengths), std::move(new_positions)),
                   std::move(origin)};
  return result;
}

std::vector<MeshDiagnostics> component_diagnostics(const SurfaceMesh& mesh) {
  int count = 0;
  std::vector<int> label = mesh.connected_component_labels(&count);
  std::vector<MeshDiagnostics> out(count);
  for (int c = 0; c < count; ++c) {
    out[c].connected_components = 1;
    out[c].ok = true;
  }
  for (int v = 0; v < mesh.vertex_count(); ++v) ++out[label[v]].vertices;
  for (const auto& e : mesh.edges()) ++out[label[e[0]]].edges;
  for (const Tri& t : mesh.triangles()) ++out[label[t[0]]].faces;
  for (MeshDiagnostics& d : out)
    d.euler = d.vertices - d.edges + d.faces;
  for (const BoundaryLoop& loop : mesh.boundary_loops())
    ++out[label[loop.vertices.front()]].boundary_components;
  return out;
}

double path_length(const SurfaceMesh& mesh, const std::vector<int>& vertices) {
  double total = 0.0;
  for (std::size_t i = 0; i + 1 < vertices.size(); ++i)
    total += mesh.edge_length(vertices[i], vertices[i + 1]);
  return total;
}

}  // namespace fillarea
