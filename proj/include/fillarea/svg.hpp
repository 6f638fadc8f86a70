#pragma once

// Deterministic SVG emission for reports: boundary samples with maximizer
// chords, bouquet loops over a mesh, and convergence curves.

#include <string>
#include <vector>

#include "fillarea/bouquet.hpp"
#include "fillarea/geodesics.hpp"
#include "fillarea/mesh.hpp"

namespace fillarea {

// Unit circle with the boundary samples and, for each sample p_i, a chord
// arrow to its maximizer q_i (indices into the sample set).
std::string svg_argmax_plot(const std::vector<double>& sample_params,
                            const std::vector<int>& maximizer_indices);

// Mesh edges in light grey with each bouquet loop as its own polyline
// group (<g class="loop">).  Requires positions; the first two position
// coordinates are used.
std::string svg_bouquet_plot(const SurfaceMesh& mesh, const Bouquet& bouquet);

// One polyline per column over the row index.  Empty input produces the
// axes frame only.
std::string svg_convergence_plot(const std::vector<std::string>& column_names,
                                 const std::vector<std::vector<double>>& rows);

void write_text_file(const std::string& path, const std::string& content);

}  // namespace fillarea
