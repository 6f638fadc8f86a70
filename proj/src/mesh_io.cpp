#include "fillarea/mesh_io.hpp"

#include <fstream>
#include <iomanip>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

namespace fillarea {

void write_mesh(const SurfaceMesh& mesh, const std::string& off_path,
                const std::string& lengths_path) {
  if (!mesh.has_positions())
    throw std::invalid_argument("mesh has no positions to write");
  std::ofstream off(off_path);
  if (!off) throw std::runtime_error("cannot write " + off_path);
  off << "OFF\n";
  off << mesh.vertex_count() << ' ' << mesh.face_count() << ' '
      << mesh.edge_count() << '\n';
  off << std::setprecision(17);
  for (const Vec3& p : mesh.positions())
    off << p[0] << ' ' << p[1] << ' ' << p[2] << '\n';
  for (const Tri& t : mesh.triangles())
    off << "3 " << t[0] << ' ' << t[1] << ' ' << t[2] << '\n';

  if (!lengths_path.empty()) {
    nlohmann::json j;
    j["edges"] = nlohmann::json::array();
    for (int e = 0; e < mesh.edge_count(); ++e)
      j["edges"].push_back({mesh.edges()[e][0], mesh.edges()[e][1],
                            mesh.edge_length(e)});
    std::ofstream out(lengths_path);
    if (!out) throw std::runtime_error("cannot write " + lengths_path);
    out << j.dump(2) << '\n';
  }
}

SurfaceMesh read_mesh(const std::string& off_path,
                      const std::string& lengths_path) {
  std::ifstream in(off_path);
  if (!in) throw std::runtime_error("cannot read " + off_path);
  std::string magic;
  in >> magic;
  if (magic != "OFF") throw std::runtime_error("not an OFF file: " + off_path);
  int nv = 0, nf = 0, ne = 0;
  in >> nv >> nf >> ne;
  std::vector<Vec3> positions(nv);
  for (int v = 0; v < nv; ++v) in >> positions[v][0] >> positions[v][1] >> positions[v][2];
  std::vector<Tri> tris(nf);
  for (int f = 0; f < nf; ++f) {
    int arity = 0;
    in >> arity;
    if (arity != 3) throw std::runtime_error("only triangle faces supported");
    in >> tris[f][0] >> tris[f][1] >> tris[f][2];
  }
  if (!in) throw std::runtime_error("truncated OFF file: " + off_path);

  if (lengths_path.empty())
    return SurfaceMesh(std::move(positions), std::move(tris));

  std::ifstream lin(lengths_path);
  if (!lin) throw std::runtime_error("cannot read " + lengths_path);
  nlohmann::json j;
  lin >> j;
  std::unordered_map<std::uint64_t, double> lengths;
  for (const auto& entry : j.at("edges"))
    lengths[edge_key(entry.at(0).get<int>(), entry.at(1).get<int>())] =
        entry.at(2).get<double>();
  return SurfaceMesh(nv, std::move(tris), std::move(lengths),
                     std::move(positions));
}

}  // namespace fillarea
