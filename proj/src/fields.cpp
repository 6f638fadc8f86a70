#include "fillarea/fields.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

#include "fillarea/circle.hpp"
#include "fillarea/layout.hpp"

namespace fillarea {

namespace {

constexpr double kTieTol = 1e-9;

double wrap_tau(double a) {
  while (a < 0.0) a += kTau;
  while (a >= kTau) a -= kTau;
  return a;
}

// Planar layout of the ordered corner triple (v, a, b): v at the origin,
// a on the positive x-axis.  The triple must be a rotation of a stored
// face, so it is counterclockwise and b lands in the upper half plane.
struct CornerChart {
  Vec2 pa, pb;
};

CornerChart corner_chart(const SurfaceMesh& mesh, int v, int a, int b) {
  double lva = mesh.edge_length(v, a);
  double lvb = mesh.edge_length(v, b);
  double lab = mesh.edge_length(a, b);
  double x = (lva * lva + lvb * lvb - lab * lab) / (2.0 * lva);
  double y2 = lvb * lvb - x * x;
  return {Vec2{lva, 0.0}, Vec2{x, y2 > 0.0 ? std::sqrt(y2) : 0.0}};
}

// Tangent-frame angle at v of the segment from v to `hop`.
double hop_direction(const SurfaceMesh& mesh, const TangentFrame& frame,
                     int v, const PredHop& hop) {
  if (hop.is_vertex()) return frame.edge_direction(hop.vertex);
  if (v == hop.eu) return frame.edge_direction(hop.ev);
  if (v == hop.ev) return frame.edge_direction(hop.eu);

  // The hop sits on edge (eu,ev) of a face whose third corner is v.
  int e = mesh.edge_id(hop.eu, hop.ev);
  if (e < 0) throw std::logic_error("hop edge missing");
  int face = -1;
  for (int f : mesh.edge_faces(e)) {
    if (f < 0) continue;
    const Tri& t = mesh.triangles()[f];
    if (t[0] == v || t[1] == v || t[2] == v) face = f;
  }
  if (face < 0) throw std::logic_error("hop face missing");
  const Tri& t = mesh.triangles()[face];
  int c = t[0] == v ? 0 : (t[1] == v ? 1 : 2);
  int a = t[(c + 1) % 3], b = t[(c + 2) % 3];

  CornerChart chart = corner_chart(mesh, v, a, b);
  Vec2 from = (a == hop.eu) ? chart.pa : chart.pb;
  Vec2 to = (a == hop.eu) ? chart.pb : chart.pa;
  Vec2 p = from + hop.t * (to - from);
  double alpha = std::atan2(p.y, p.x);  // in [0, corner angle]
  double scale = kTau / frame.total_angle;
  return wrap_tau(frame.edge_direction(a) + alpha * scale);
}

void fill_gradient(const SurfaceMesh& mesh, const std::vector<PredHop>& hops,
                   SpecialField& field, bool reverse) {
  const int V = mesh.vertex_count();
  field.grad_dir.assign(V, std::numeric_limits<double>::quiet_NaN());
  field.grad_defined.assign(V, false);
  for (int v = 0; v < V; ++v) {
    if (mesh.is_boundary_vertex(v)) continue;
    if (hops[v].none()) continue;
    TangentFrame frame = tangent_frame(mesh, v);
    double dir = hop_direction(mesh, frame, v, hops[v]);
    if (reverse) dir = wrap_tau(dir + kPi);
    field.grad_dir[v] = dir;
    field.grad_defined[v] = true;
  }
}

}  // namespace

double TangentFrame::edge_direction(int neighbor) const {
  for (std::size_t i = 0; i < neighbors.size(); ++i)
    if (neighbors[i] == neighbor) return direction[i];
  throw std::invalid_argument("not a neighbor of this vertex");
}

TangentFrame tangent_frame(const SurfaceMesh& mesh, int vertex) {
  if (mesh.is_boundary_vertex(vertex))
    throw std::invalid_argument("tangent frame requires an interior vertex");
  TangentFrame frame;
  frame.vertex = vertex;
  frame.neighbors = mesh.vertex_fan(vertex);
  const std::size_t n = frame.neighbors.size();
  if (n < 3) throw std::runtime_error("degenerate vertex link");

  std::vector<double> corner(n);
  frame.fan_faces.resize(n);
  for (std::size_t i = 0; i < n; ++i) {
    int a = frame.neighbors[i];
    int f = mesh.face_with_directed_edge(vertex, a);
    if (f < 0) throw std::runtime_error("broken fan at interior vertex");
    frame.fan_faces[i] = f;
    corner[i] = mesh.corner_angle(f, vertex);
    frame.total_angle += corner[i];
  }
  double scale = kTau / frame.total_angle;
  frame.direction.resize(n);
  double acc = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    frame.direction[i] = acc;
    acc += corner[i] * scale;
  }
  return frame;
}

SpecialField special_field(const SurfaceMesh& mesh,
                           const BoundaryDistanceMatrix& d0, int p_index,
                           const std::vector<DistanceField>& fields) {
  const std::size_t n = d0.params.size();
  if (fields.size() != n) throw std::invalid_argument("sample mismatch");
  if (p_index < 0 || static_cast<std::size_t>(p_index) >= n)
    throw std::invalid_argument("p index out of range");
  const int V = mesh.vertex_count();
  for (const DistanceField& f : fields)
    if (static_cast<int>(f.dist.size()) != V)
      throw std::invalid_argument("sample mismatch");

  SpecialField out;
  out.p_index = p_index;
  out.values.resize(V);
  out.argmax.resize(V);
  const std::vector<double>& row = d0.d[p_index];

  std::vector<PredHop> hops(V);
  for (int v = 0; v < V; ++v) {
    double best = -std::numeric_limits<double>::infinity();
    for (std::size_t j = 0; j < n; ++j)
      best = std::max(best, row[j] - fields[j].dist[v]);
    // Nearest point of maximum among near-ties, then lowest index.
    int arg = -1;
    double arg_dist = std::numeric_limits<double>::infinity();
    for (std::size_t j = 0; j < n; ++j) {
      double value = row[j] - fields[j].dist[v];
      if (value < best - kTieTol) continue;
      double dq = fields[j].dist[v];
      if (dq < arg_dist - kTieTol) {
        arg = static_cast<int>(j);
        arg_dist = dq;
      }
    }
    out.values[v] = best;
    out.argmax[v] = arg;
    hops[v] = fields[arg].pred[v];
  }
  fill_gradient(mesh, hops, out, /*reverse=*/false);
  return out;
}

SpecialField tilde_field(const SurfaceMesh& disc, int p_index,
                         const BoundarySamples& samples,
                         int steiner_per_edge) {
  if (disc.genus() != 0 || disc.boundary_loops().size() != 1)
    throw std::runtime_error("tilde field requires a disc");
  if (p_index < 0 ||
      static_cast<std::size_t>(p_index) >= samples.vertices.size())
    throw std::invalid_argument("p index out of range");
  return tilde_field(disc, p_index,
                     distance_field(disc, samples.vertices[p_index],
                                    steiner_per_edge));
}

SpecialField tilde_field(const SurfaceMesh& disc, int p_index,
                         const DistanceField& from_p) {
  SpecialField out;
  out.p_index = p_index;
  out.values = from_p.dist;
  out.argmax.assign(disc.vertex_count(), -1);
  // The distance from p grows away from p, so the gradient points opposite
  // to the first hop of the path toward p.
  fill_gradient(disc, from_p.pred, out, /*reverse=*/true);
  return out;
}

double check_boundary_agreement(const SpecialField& fM,
                                const std::vector<int>& sample_vertices_M,
                                const SpecialField& fD,
                                const std::vector<int>& sample_vertices_D) {
  if (sample_vertices_M.size() != sample_vertices_D.size())
    throw std::invalid_argument("sample mismatch");
  double worst = 0.0;
  for (std::size_t i = 0; i < sample_vertices_M.size(); ++i) {
    double gap = std::fabs(fM.values[sample_vertices_M[i]] -
                           fD.values[sample_vertices_D[i]]);
    worst = std::max(worst, gap);
  }
  return worst;
}

double gradient_direction(const SurfaceMesh& mesh, const SpecialField& field,
                          int x) {
  if (x < 0 || x >= mesh.vertex_count())
    throw std::invalid_argument("vertex out of range");
  if (mesh.is_boundary_vertex(x))
    throw std::invalid_argument("gradient undefined on the boundary");
  if (field.grad_defined.empty() || !field.grad_defined[x])
    throw std::runtime_error("gradient undefined at this vertex");
  return field.grad_dir[x];
}

OrderCheck check_order_of_maxima(const BoundaryDistanceMatrix& d0,
                                 const std::vector<SpecialField>& fields_by_p,
                                 int x) {
  const std::size_t n = fields_by_p.size();
  if (n != d0.params.size())
    throw std::invalid_argument("sample mismatch");
  if (n == 1) return OrderCheck::kCounterclockwise;

  std::vector<int> maximizers;
  for (const SpecialField& f : fields_by_p) {
    int q = f.argmax[x];
    if (q < 0) return OrderCheck::kDegenerate;
    maximizers.push_back(q);
  }
  std::vector<int> sorted = maximizers;
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
    return OrderCheck::kDegenerate;

  CirclePointSet reference, candidate;
  for (std::size_t i = 0; i < n; ++i) {
    reference.angles.emplace_back(kTau * d0.params[i]);
    candidate.angles.emplace_back(kTau * d0.params[maximizers[i]]);
  }
  return check_cyclic_order(reference, candidate)
             ? OrderCheck::kCounterclockwise
             : OrderCheck::kViolated;
}

bool check_non_separation(double p_i, double q_i, double p_j, double q_j) {
  auto gap = [](double a, double b) {
    double g = b - a;
    g -= std::floor(g);
    return g;
  };
  double span = gap(p_i, q_j);
  bool pj_inside = gap(p_i, p_j) <= span;
  bool qi_inside = gap(p_i, q_i) <= span;
  return pj_inside == qi_inside;
}

OrderCheck check_order_of_maxima_perturbed(const SurfaceMesh& mesh,
                                           int n_samples, int steiner_per_edge,
                                           int x, int max_attempts) {
  double vertex_step = 0.0;
  for (int attempt = 0; attempt < max_attempts; ++attempt) {
    BoundarySamples samples =
        boundary_samples(mesh, n_samples, attempt * vertex_step);
    if (attempt == 0)
      vertex_step = 1.0 / static_cast<double>(samples.loop.vertices.size());
    std::vector<DistanceField> dist =
        sample_distance_fields(mesh, samples, steiner_per_edge);
    BoundaryDistanceMatrix d0 = matrix_from_fields(samples, dist);
    std::vector<SpecialField> fields;
    for (int p = 0; p < n_samples; ++p)
      fields.push_back(special_field(mesh, d0, p, dist));
    OrderCheck result = check_order_of_maxima(d0, fields, x);
    if (result != OrderCheck::kDegenerate) return result;
  }
  throw std::runtime_error("degenerate configuration");
}

}  // namespace fillarea
