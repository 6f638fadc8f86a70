#pragma once

// OFF-style ASCII mesh files plus an optional JSON sidecar overriding the
// embedded edge lengths (for meshes whose metric is not the 3-space one).

#include <string>

#include "fillarea/mesh.hpp"

namespace fillarea {

// OFF with vertex positions; lengths are written to `lengths_path` (JSON
// {"edges": [[u, v, length], ...]}) when non-empty.  Writing lengths is
// required to round-trip meshes whose metric differs from the embedding.
void write_mesh(const SurfaceMesh& mesh, const std::string& off_path,
                const std::string& lengths_path = "");

// Reads the OFF file; when `lengths_path` is non-empty the sidecar lengths
// replace the embedded ones (every edge must be covered).
SurfaceMesh read_mesh(const std::string& off_path,
                      const std::string& lengths_path = "");

}  // namespace fillarea
