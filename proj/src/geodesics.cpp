#include "fillarea/geodesics.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <queue>
#include <stdexcept>

#include "fillarea/layout.hpp"

namespace fillarea {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

struct Adjacency {
  std::vector<std::vector<std::pair<int, double>>> nbr;

  void connect(int a, int b, double w) {
    nbr[a].push_back({b, w});
    nbr[b].push_back({a, w});
  }
};

// Node ids: [0, V) mesh vertices, then `s` nodes per edge in edge order,
// placed at fractions i/(s+1) from the lower-indexed endpoint.
int steiner_node(int vertex_count, int edge, int s, int i) {
  return vertex_count + edge * s + (i - 1);
}

Adjacency build_steiner_graph(const SurfaceMesh& mesh, int s) {
  const int V = mesh.vertex_count();
  const int E = mesh.edge_count();
  Adjacency g;
  g.nbr.resize(static_cast<std::size_t>(V) + static_cast<std::size_t>(E) * s);

  // Chains along each edge.
  for (int e = 0; e < E; ++e) {
    int u = mesh.edges()[e][0], v = mesh.edges()[e][1];
    double step = mesh.edge_length(e) / (s + 1);
    if (s == 0) {
      g.connect(u, v, mesh.edge_length(e));
      continue;
    }
    int prev = u;
    for (int i = 1; i <= s; ++i) {
      int node = steiner_node(V, e, s, i);
      g.connect(prev, node, step);
      prev = node;
    }
    g.connect(prev, v, step);
  }
  if (s == 0) return g;

  // Straight segments across each face between nodes of different edges.
  for (int f = 0; f < mesh.face_count(); ++f) {
    const Tri& t = mesh.triangles()[f];
    std::array<Vec2, 3> P = face_layout(mesh, f);

    // Collect (node id, layout position) for the three edges' interior nodes.
    struct FaceNode {
      int id;
      Vec2 p;
      int side;  // which face edge it lies on
    };
    std::vector<FaceNode> nodes;
    nodes.reserve(3 * s);
    for (int side = 0; side < 3; ++side) {
      int a = t[side], b = t[(side + 1) % 3];
      int e = mesh.edge_id(a, b);
      // Fractions are measured from the lower-indexed endpoint.
      Vec2 from = P[side], to = P[(side + 1) % 3];
      if (a > b) std::swap(from, to);
      for (int i = 1; i <= s; ++i) {
        double frac = static_cast<double>(i) / (s + 1);
        nodes.push_back({steiner_node(V, e, s, i),
                         from + frac * (to - from), side});
      }
    }
    // Edge-node to edge-node across the face.
    for (std::size_t i = 0; i < nodes.size(); ++i)
      for (std::size_t j = i + 1; j < nodes.size(); ++j)
        if (nodes[i].side != nodes[j].side)
          g.connect(nodes[i].id, nodes[j].id, norm(nodes[i].p - nodes[j].p));
    // Corner to opposite-edge nodes.
    for (int c = 0; c < 3; ++c) {
      int opposite_side = (c + 1) % 3;  // edge (t[c+1], t[c+2])
      for (const FaceNode& n : nodes)
        if (n.side == opposite_side)
          g.connect(t[c], n.id, norm(P[c] - n.p));
    }
  }
  return g;
}

}  // namespace

DistanceField distance_field(const SurfaceMesh& mesh, int source,
                             int steiner_per_edge) {
  if (source < 0 || source >= mesh.vertex_count())
    throw std::invalid_argument("source vertex out of range");
  if (steiner_per_edge < 0)
    throw std::invalid_argument("steiner count must be nonnegative");

  const int V = mesh.vertex_count();
  Adjacency g = build_steiner_graph(mesh, steiner_per_edge);
  const std::size_t N = g.nbr.size();

  std::vector<double> dist(N, kInf);
  std::vector<int> pred(N, -1);
  using Item = std::pair<double, int>;
  std::priority_queue<Item, std::vector<Item>, std::greater<Item>> heap;
  dist[source] = 0.0;
  heap.push({0.0, source});
  while (!heap.empty()) {
    auto [d, u] = heap.top();
    heap.pop();
    if (d > dist[u]) continue;
    for (auto [w, len] : g.nbr[u]) {
      double nd = d + len;
      if (nd < dist[w]) {
        dist[w] = nd;
        pred[w] = u;
        heap.push({nd, w});
      } else if (nd == dist[w] && u < pred[w]) {
        pred[w] = u;  // deterministic tree under ties
      }
    }
  }

  DistanceField field;
  field.source = source;
  field.steiner = steiner_per_edge;
  field.dist.assign(dist.begin(), dist.begin() + V);
  for (int v = 0; v < V; ++v)
    if (field.dist[v] == kInf)
      throw std::runtime_error("disconnected mesh");

  field.pred.resize(V);
  const int s = steiner_per_edge;
  for (int v = 0; v < V; ++v) {
    int p = pred[v];
    if (p < 0) continue;  // the source
    if (p < V) {
      field.pred[v].vertex = p;
    } else {
      int e = (p - V) / s;
      int i = (p - V) % s + 1;
      field.pred[v].eu = mesh.edges()[e][0];
      field.pred[v].ev = mesh.edges()[e][1];
      field.pred[v].t = static_cast<double>(i) / (s + 1);
    }
  }
  return field;
}

VertexPath shortest_path(const SurfaceMesh& mesh, const DistanceField& field,
                         int target) {
  if (field.steiner != 0)
    throw std::logic_error("path recovery requires a steiner = 0 field");
  if (target < 0 || target >= mesh.vertex_count())
    throw std::invalid_argument("target vertex out of range");

  VertexPath path;
  int cur = target;
  while (cur != field.source) {
    path.vertices.push_back(cur);
    const PredHop& hop = field.pred[cur];
    if (!hop.is_vertex()) throw std::runtime_error("unreachable target");
    cur = hop.vertex;
  }
  path.vertices.push_back(field.source);
  std::reverse(path.vertices.begin(), path.vertices.end());
  path.length = field.dist[target];
  return path;
}

VertexPath constrained_shortest_path(const SurfaceMesh& mesh, int from, int to,
                                     const std::vector<bool>& forbidden) {
  const int V = mesh.vertex_count();
  std::vector<double> dist(V, kInf);
  std::vector<int> pred(V, -1);
  using Item = std::pair<double, int>;
  std::priority_queue<Item, std::vector<Item>, std::greater<Item>> heap;
  dist[from] = 0.0;
  heap.push({0.0, from});
  while (!heap.empty()) {
    auto [d, u] = heap.top();
    heap.pop();
    if (d > dist[u]) continue;
    if (u == to) break;
    for (int e : mesh.vertex_edges(u)) {
      int w = mesh.edges()[e][0] == u ? mesh.edges()[e][1] : mesh.edges()[e][0];
      if (w != to && w != from && forbidden[w]) continue;
      double nd = d + mesh.edge_length(e);
      if (nd < dist[w]) {
        dist[w] = nd;
        pred[w] = u;
        heap.push({nd, w});
      } else if (nd == dist[w] && u < pred[w]) {
        pred[w] = u;
      }
    }
  }
  VertexPath path;
  if (dist[to] == kInf) return path;
  int cur = to;
  while (cur >= 0) {
    path.vertices.push_back(cur);
    cur = pred[cur];
  }
  std::reverse(path.vertices.begin(), path.vertices.end());
  path.length = dist[to];
  return path;
}

SurfaceMesh refine(const SurfaceMesh& mesh, int steiner_per_edge) {
  if (steiner_per_edge < 0)
    throw std::invalid_argument("steiner count must be nonnegative");
  if (steiner_per_edge == 0) return mesh;

  const int k = steiner_per_edge;
  const int m = k + 1;  // subdivision order
  const int V = mesh.vertex_count();
  const int E = mesh.edge_count();

  auto edge_point = [&](int e, int i) { return V + e * k + (i - 1); };
  int next_id = V + E * k;
  std::vector<int> face_base(mesh.face_count());
  const int interior_per_face = k * (k - 1) / 2;
  for (int f = 0; f < mesh.face_count(); ++f) {
    face_base[f] = next_id;
    next_id += interior_per_face;
  }
  const int new_vertex_count = next_id;

  std::unordered_map<std::uint64_t, double> lengths;
  std::vector<Tri> tris;
  tris.reserve(static_cast<std::size_t>(mesh.face_count()) * m * m);
  std::vector<Vec3> positions;
  if (mesh.has_positions()) positions.resize(new_vertex_count);

  // Sub-segments of original edges all have length len/m.
  for (int e = 0; e < E; ++e) {
    int u = mesh.edges()[e][0], v = mesh.edges()[e][1];
    double step = mesh.edge_length(e) / m;
    int prev = u;
    for (int i = 1; i <= k; ++i) {
      lengths[edge_key(prev, edge_point(e, i))] = step;
      prev = edge_point(e, i);
    }
    lengths[edge_key(prev, v)] = step;
  }

  for (int f = 0; f < mesh.face_count(); ++f) {
    const Tri& t = mesh.triangles()[f];
    std::array<Vec2, 3> P = face_layout(mesh, f);

    // Global id of lattice point (i,j), with i along t0->t1, j along t0->t2.
    int interior_counter = 0;
    std::vector<std::vector<int>> id(m + 1, std::vector<int>(m + 1, -1));
    std::vector<std::vector<Vec2>> pt(m + 1, std::vector<Vec2>(m + 1));
    for (int i = 0; i <= m; ++i) {
      for (int j = 0; i + j <= m; ++j) {
        pt[i][j] = P[0] + (static_cast<double>(i) / m) * (P[1] - P[0]) +
                   (static_cast<double>(j) / m) * (P[2] - P[0]);
        int g;
        if (i == 0 && j == 0) g = t[0];
        else if (i == m && j == 0) g = t[1];
        else if (i == 0 && j == m) g = t[2];
        else if (j == 0) {
          int e = mesh.edge_id(t[0], t[1]);
          g = edge_point(e, t[0] < t[1] ? i : m - i);
        } else if (i == 0) {
          int e = mesh.edge_id(t[0], t[2]);
          g = edge_point(e, t[0] < t[2] ? j : m - j);
        } else if (i + j == m) {
          int e = mesh.edge_id(t[1], t[2]);
          g = edge_point(e, t[1] < t[2] ? j : m - j);
        } else {
          g = face_base[f] + interior_counter++;
        }
        id[i][j] = g;
        if (mesh.has_positions()) {
          const Vec3& p0 = mesh.positions()[t[0]];
          const Vec3& p1 = mesh.positions()[t[1]];
          const Vec3& p2 = mesh.positions()[t[2]];
          double a = 1.0 - static_cast<double>(i) / m - static_cast<double>(j) / m;
          double b = static_cast<double>(i) / m;
          double c = static_cast<double>(j) / m;
          positions[g] = {a * p0[0] + b * p1[0] + c * p2[0],
                          a * p0[1] + b * p1[1] + c * p2[1],
                          a * p0[2] + b * p1[2] + c * p2[2]};
        }
      }
    }

    auto put_length = [&](int a, int b, Vec2 pa, Vec2 pb) {
      std::uint64_t key = edge_key(a, b);
      if (!lengths.count(key)) lengths[key] = norm(pa - pb);
    };
    for (int i = 0; i <= m; ++i) {
      for (int j = 0; i + j <= m - 1; ++j) {
        tris.push_back({id[i][j], id[i + 1][j], id[i][j + 1]});
        put_length(id[i][j], id[i + 1][j], pt[i][j], pt[i + 1][j]);
        put_length(id[i + 1][j], id[i][j + 1], pt[i + 1][j], pt[i][j + 1]);
        put_length(id[i][j], id[i][j + 1], pt[i][j], pt[i][j + 1]);
        if (i + j <= m - 2) {
          tris.push_back({id[i + 1][j], id[i + 1][j + 1], id[i][j + 1]});
          put_length(id[i + 1][j], id[i + 1][j + 1], pt[i + 1][j], pt[i + 1][j + 1]);
          put_length(id[i + 1][j + 1], id[i][j + 1], pt[i + 1][j + 1], pt[i][j + 1]);
        }
      }
    }
  }

  return SurfaceMesh(new_vertex_count, std::move(tris), std::move(lengths),
                     std::move(positions));
}

BoundarySamples boundary_samples(const SurfaceMesh& mesh, int n_samples,
                                 double phase) {
  if (n_samples < 2) throw std::invalid_argument("need at least two samples");
  std::vector<BoundaryLoop> loops = mesh.boundary_loops();
  if (loops.size() != 1) throw std::runtime_error("expected filling boundary");
  BoundarySamples out;
  out.loop = std::move(loops.front());
  const std::size_t nb = out.loop.vertices.size();
  if (static_cast<std::size_t>(n_samples) > nb)
    throw std::invalid_argument("more samples than boundary vertices");
  for (int i = 0; i < n_samples; ++i) {
    double target = static_cast<double>(i) / n_samples + phase;
    target -= std::floor(target);
    // Nearest boundary vertex in cyclic parameter distance.
    std::size_t best = 0;
    double best_gap = 2.0;
    for (std::size_t v = 0; v < nb; ++v) {
      double gap = std::fabs(out.loop.params[v] - target);
      gap = std::min(gap, 1.0 - gap);
      if (gap < best_gap) {
        best_gap = gap;
        best = v;
      }
    }
    out.params.push_back(out.loop.params[best]);
    out.vertices.push_back(out.loop.vertices[best]);
  }
  for (std::size_t i = 0; i < out.vertices.size(); ++i)
    for (std::size_t j = i + 1; j < out.vertices.size(); ++j)
      if (out.vertices[i] == out.vertices[j])
        throw std::invalid_argument("samples collide: boundary too coarse");
  return out;
}

std::vector<DistanceField> sample_distance_fields(const SurfaceMesh& mesh,
                                                  const BoundarySamples& samples,
                                                  int steiner_per_edge) {
  std::vector<DistanceField> fields;
  fields.reserve(samples.vertices.size());
  for (int v : samples.vertices)
    fields.push_back(distance_field(mesh, v, steiner_per_edge));
  return fields;
}

BoundaryDistanceMatrix matrix_from_fields(const BoundarySamples& samples,
                                          const std::vector<DistanceField>& fields) {
  BoundaryDistanceMatrix mat;
  mat.params = samples.params;
  mat.vertices = samples.vertices;
  mat.boundary_length = samples.loop.length;
  const std::size_t n = samples.vertices.size();
  mat.d.assign(n, std::vector<double>(n, 0.0));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) {
      double v = fields[i].dist[samples.vertices[j]];
      mat.d[i][j] = v;
      mat.d[j][i] = v;
    }
  return mat;
}

BoundaryDistanceMatrix boundary_distance_matrix(const SurfaceMesh& mesh,
                                                int n_samples,
                                                int steiner_per_edge) {
  BoundarySamples samples = boundary_samples(mesh, n_samples);
  std::vector<DistanceField> fields =
      sample_distance_fields(mesh, samples, steiner_per_edge);
  return matrix_from_fields(samples, fields);
}

bool verify_boundary_domination(const BoundaryDistanceMatrix& d0,
                                const BoundaryDistanceMatrix& d, double slack,
                                double param_tol) {
  if (d0.params.size() != d.params.size())
    throw std::invalid_argument("sample mismatch");
  for (std::size_t i = 0; i < d0.params.size(); ++i) {
    double gap = std::fabs(d0.params[i] - d.params[i]);
    gap = std::min(gap, 1.0 - gap);
    if (gap > param_tol) throw std::invalid_argument("sample mismatch");
  }
  for (std::size_t i = 0; i < d0.d.size(); ++i)
    for (std::size_t j = 0; j < d0.d.size(); ++j)
      if (d0.d[i][j] > d.d[i][j] + slack) return false;
  return true;
}

}  // namespace fillarea
