#include "fillarea/svg.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include "fillarea/circle.hpp"

namespace fillarea {

namespace {

std::string header(double w, double h) {
  std::ostringstream out;
  out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << w
      << "\" height=\"" << h << "\" viewBox=\"0 0 " << w << ' ' << h
      << "\">\n";
  return out.str();
}

void set_fixed(std::ostringstream& out) {
  out.setf(std::ios::fixed);
  out.precision(3);
}

}  // namespace

std::string svg_argmax_plot(const std::vector<double>& sample_params,
                            const std::vector<int>& maximizer_indices) {
  if (sample_params.size() != maximizer_indices.size())
    throw std::invalid_argument("sample/maximizer size mismatch");
  const double size = 400.0, cx = 200.0, cy = 200.0, r = 160.0;
  std::ostringstream out;
  set_fixed(out);
  out << header(size, size);
  out << "<circle cx=\"" << cx << "\" cy=\"" << cy << "\" r=\"" << r
      << "\" fill=\"none\" stroke=\"black\"/>\n";
  auto at = [&](double param) {
    double a = kTau * param;
    // SVG y grows downward; flip so parameters run counterclockwise.
    return std::pair(cx + r * std::cos(a), cy - r * std::sin(a));
  };
  for (std::size_t i = 0; i < sample_params.size(); ++i) {
    auto [px, py] = at(sample_params[i]);
    out << "<circle cx=\"" << px << "\" cy=\"" << py
        << "\" r=\"4\" fill=\"steelblue\"/>\n";
    int q = maximizer_indices[i];
    if (q < 0) continue;
    auto [qx, qy] = at(sample_params[q]);
    out << "<line class=\"argmax\" x1=\"" << px << "\" y1=\"" << py
        << "\" x2=\"" << qx << "\" y2=\"" << qy
        << "\" stroke=\"tomato\" stroke-width=\"1\"/>\n";
    out << "<circle cx=\"" << qx << "\" cy=\"" << qy
        << "\" r=\"2.5\" fill=\"tomato\"/>\n";
  }
  out << "</svg>\n";
  return out.str();
}

std::string svg_bouquet_plot(const SurfaceMesh& mesh, const Bouquet& bouquet) {
  if (!mesh.has_positions())
    throw std::invalid_argument("bouquet plot needs positions");
  double min_x = 1e300, max_x = -1e300, min_y = 1e300, max_y = -1e300;
  for (const Vec3& p : mesh.positions()) {
    min_x = std::min(min_x, p[0]);
    max_x = std::max(max_x, p[0]);
    min_y = std::min(min_y, p[1]);
    max_y = std::max(max_y, p[1]);
  }
  const double size = 500.0, pad = 20.0;
  double span = std::max(max_x - min_x, max_y - min_y);
  if (span <= 0.0) span = 1.0;
  auto at = [&](int v) {
    const Vec3& p = mesh.positions()[v];
    return std::pair(pad + (p[0] - min_x) / span * (size - 2 * pad),
                     size - pad - (p[1] - min_y) / span * (size - 2 * pad));
  };

  std::ostringstream out;
  set_fixed(out);
  out << header(size, size);
  out << "<g stroke=\"#cccccc\" stroke-width=\"0.3\">\n";
  for (const auto& e : mesh.edges()) {
    auto [x1, y1] = at(e[0]);
    auto [x2, y2] = at(e[1]);
    // Skip seam edges that wrap across the chart.
    if (std::hypot(x2 - x1, y2 - y1) > 0.55 * size) continue;
    out << "<line x1=\"" << x1 << "\" y1=\"" << y1 << "\" x2=\"" << x2
        << "\" y2=\"" << y2 << "\"/>\n";
  }
  out << "</g>\n";

  const char* colors[] = {"crimson", "royalblue", "seagreen", "darkorange",
                          "purple", "teal"};
  for (std::size_t k = 0; k < bouquet.loops.size(); ++k) {
    out << "<g class=\"loop\" fill=\"none\" stroke=\""
        << colors[k % 6] << "\" stroke-width=\"1.6\">\n";
    const std::vector<int>& vs = bouquet.loops[k].vertices;
    for (std::size_t i = 0; i + 1 < vs.size(); ++i) {
      auto [x1, y1] = at(vs[i]);
      auto [x2, y2] = at(vs[i + 1]);
      if (std::hypot(x2 - x1, y2 - y1) > 0.55 * size) continue;
      out << "<line x1=\"" << x1 << "\" y1=\"" << y1 << "\" x2=\"" << x2
          << "\" y2=\"" << y2 << "\"/>\n";
    }
    out << "</g>\n";
  }
  if (bouquet.basepoint >= 0) {
    auto [bx, by] = at(bouquet.basepoint);
    out << "<circle cx=\"" << bx << "\" cy=\"" << by
        << "\" r=\"4\" fill=\"black\"/>\n";
  }
  out << "</svg>\n";
  return out.str();
}

std::string svg_convergence_plot(const std::vector<std::string>& column_names,
                                 const std::vector<std::vector<double>>& rows) {
  const double w = 520.0, h = 360.0, pad = 40.0;
  std::ostringstream out;
  set_fixed(out);
  out << header(w, h);
  out << "<rect x=\"" << pad << "\" y=\"" << pad << "\" width=\"" << w - 2 * pad
      << "\" height=\"" << h - 2 * pad
      << "\" fill=\"none\" stroke=\"black\"/>\n";
  if (!rows.empty() && !column_names.empty()) {
    double lo = 1e300, hi = -1e300;
    for (const auto& row : rows)
      for (double v : row) {
        lo = std::min(lo, v);
        hi = std::max(hi, v);
      }
    if (hi <= lo) hi = lo + 1.0;
    const char* colors[] = {"crimson", "royalblue", "seagreen", "darkorange",
                            "purple", "teal"};
    for (std::size_t c = 0; c < column_names.size(); ++c) {
      out << "<polyline class=\"series\" fill=\"none\" stroke=\""
          << colors[c % 6] << "\" stroke-width=\"1.5\" points=\"";
      for (std::size_t i = 0; i < rows.size(); ++i) {
        double x = pad + (rows.size() == 1
                              ? 0.0
                              : static_cast<double>(i) / (rows.size() - 1) *
                                    (w - 2 * pad));
        double y = h - pad - (rows[i][c] - lo) / (hi - lo) * (h - 2 * pad);
        out << x << ',' << y << ' ';
      }
      out << "\"/>\n";
      out << "<text x=\"" << pad + 6 << "\" y=\"" << pad + 14 + 14 * c
          << "\" fill=\"" << colors[c % 6] << "\" font-size=\"11\">"
          << column_names[c] << "</text>\n";
    }
  }
  out << "</svg>\n";
  return out.str();
}

void write_text_file(const std::string& path, const std::string& content) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write " + path);
  out << content;
}

}  // namespace fillarea
