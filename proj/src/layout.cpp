#include "fillarea/layout.hpp"

#include <algorithm>
#include <cmath>

namespace fillarea {

std::array<Vec2, 3> face_layout(const SurfaceMesh& mesh, int face) {
  const Tri& t = mesh.triangles()[face];
  double l01 = mesh.edge_length(t[0], t[1]);
  double l02 = mesh.edge_length(t[0], t[2]);
  double l12 = mesh.edge_length(t[1], t[2]);
  double x = (l01 * l01 + l02 * l02 - l12 * l12) / (2.0 * l01);
  double y2 = l02 * l02 - x * x;
  double y = y2 > 0.0 ? std::sqrt(y2) : 0.0;
  return {Vec2{0.0, 0.0}, Vec2{l01, 0.0}, Vec2{x, y}};
}

Vec2 face_gradient(const std::array<Vec2, 3>& corners,
                   const std::array<double, 3>& values) {
  // Solve grad . (P1-P0) = f1-f0, grad . (P2-P0) = f2-f0.
  Vec2 e1 = corners[1] - corners[0];
  Vec2 e2 = corners[2] - corners[0];
  double det = cross(e1, e2);
  double b1 = values[1] - values[0];
  double b2 = values[2] - values[0];
  return {(b1 * e2.y - b2 * e1.y) / det, (b2 * e1.x - b1 * e2.x) / det};
}

}  // namespace fillarea
