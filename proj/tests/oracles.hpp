#pragma once

// Test-only oracles, kept independent of the library code they check.

#include <algorithm>
#include <cmath>
#include <set>
#include <vector>

#include "fillarea/bouquet.hpp"
#include "fillarea/circle.hpp"
#include "fillarea/mesh.hpp"

namespace oracles {

// Case analysis of the oriented origin triangle: find the shorter arc
// between a and b; positive when it runs counterclockwise from a to b,
// negative the other way, zero for equal or antipodal points.  The
// magnitude is the planar shoelace area of the actual triangle.
inline double oriented_area_cases(double a, double b) {
  const double tau = fillarea::kTau;
  double w = std::fmod(b - a, tau);
  if (w < 0) w += tau;
  if (w < 1e-12 || tau - w < 1e-12) return 0.0;          // equal points
  if (std::fabs(w - fillarea::kPi) < 1e-12) return 0.0;  // antipodal
  double ax = std::cos(a), ay = std::sin(a);
  double bx = std::cos(b), by = std::sin(b);
  double shoelace = 0.5 * std::fabs(ax * by - ay * bx);
  return w < fillarea::kPi ? shoelace : -shoelace;
}

// Shoelace area of the polygon inscribed at the given angles (assumed in
// counterclockwise cyclic order).
inline double inscribed_polygon_area(const std::vector<double>& angles) {
  double sum = 0.0;
  for (std::size_t i = 0; i < angles.size(); ++i) {
    double a = angles[i], b = angles[(i + 1) % angles.size()];
    sum += std::cos(a) * std::sin(b) - std::sin(a) * std::cos(b);
  }
  return 0.5 * sum;
}

// On the flat unit disc, the maximizer of chord(p,q) - |x - q| over the
// boundary circle, found by dense scan.  Returns the angle of q.
inline double disc_argmax_angle(double p_angle, double x_x, double x_y,
                                int grid = 400000) {
  double best_value = -1e300, best_angle = 0.0;
  for (int k = 0; k < grid; ++k) {
    double q = fillarea::kTau * k / grid;
    double chord = 2.0 * std::fabs(std::sin(0.5 * (q - p_angle)));
    double qx = std::cos(q), qy = std::sin(q);
    double value = chord - std::hypot(qx - x_x, qy - x_y);
    if (value > best_value) {
      best_value = value;
      best_angle = q;
    }
  }
  return best_angle;
}

// Exhaustive branch-and-bound search for the shortest simple interior
// noncontractible loop through x.  dist_to_x must be edge-graph distances
// from x (an admissible lower bound for closing the loop).
class ExhaustiveLoopSearch {
 public:
  ExhaustiveLoopSearch(const fillarea::SurfaceMesh& mesh, int x,
                       const std::vector<double>& dist_to_x)
      : mesh_(mesh), x_(x), dist_(dist_to_x) {}

  // Returns the optimal length, or +inf if none found below `limit`.
  double search(double limit) {
    best_ = limit;
    on_path_.assign(mesh_.vertex_count(), false);
    path_ = {x_};
    on_path_[x_] = true;
    dfs(x_, 0.0);
    return best_;
  }

 private:
  void dfs(int v, double length) {
    for (int e : mesh_.vertex_edges(v)) {
      int w = mesh_.edges()[e][0] == v ? mesh_.edges()[e][1]
                                       : mesh_.edges()[e][0];
      double next = length + mesh_.edge_length(e);
      if (w == x_) {
        if (path_.size() < 3 || next >= best_) continue;
        fillarea::VertexPath loop;
        loop.vertices = path_;
        loop.vertices.push_back(x_);
        loop.length = next;
        if (fillarea::loop_is_noncontractible(mesh_, loop)) best_ = next;
        continue;
      }
      if (on_path_[w] || mesh_.is_boundary_vertex(w)) continue;
      if (next + dist_[w] >= best_) continue;  // cannot close any shorter
      on_path_[w] = true;
      path_.push_back(w);
      dfs(w, next);
      path_.pop_back();
      on_path_[w] = false;
    }
  }

  const fillarea::SurfaceMesh& mesh_;
  int x_;
  std::vector<double> dist_;
  double best_ = 0.0;
  std::vector<bool> on_path_;
  std::vector<int> path_;
};

}  // namespace oracles
