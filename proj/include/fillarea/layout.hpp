#pragma once

// Intrinsic planar layout of single faces.  Every per-face computation
// (Steiner segments, affine gradients, corner directions) happens in this
// frame, so only edge lengths ever enter the metric.

#include <array>
#include <cmath>

#include "fillarea/mesh.hpp"

namespace fillarea {

struct Vec2 {
  double x = 0.0, y = 0.0;
};

inline Vec2 operator-(Vec2 a, Vec2 b) { return {a.x - b.x, a.y - b.y}; }
inline Vec2 operator+(Vec2 a, Vec2 b) { return {a.x + b.x, a.y + b.y}; }
inline Vec2 operator*(double s, Vec2 a) { return {s * a.x, s * a.y}; }
inline double dot(Vec2 a, Vec2 b) { return a.x * b.x + a.y * b.y; }
inline double cross(Vec2 a, Vec2 b) { return a.x * b.y - a.y * b.x; }
inline double norm(Vec2 a) { return std::sqrt(a.x * a.x + a.y * a.y); }

// Lay out face f isometrically: corner 0 at the origin, corner 1 on the
// positive x-axis, corner 2 in the upper half plane.  With the stored
// counterclockwise corner order this is an orientation-preserving chart.
std::array<Vec2, 3> face_layout(const SurfaceMesh& mesh, int face);

// Gradient of the affine interpolant of per-corner values in that chart.
Vec2 face_gradient(const std::array<Vec2, 3>& corners,
                   const std::array<double, 3>& values);

}  // namespace fillarea
