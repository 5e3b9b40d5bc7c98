#include <fstream>
#include <sstream>
#include <string>

#include "amigo/mesh.hpp"

namespace amigo {

namespace {

// "f 1/2/3" style references: take the leading vertex index.
int parse_face_index(const std::string& token, size_t vertex_count, const std::string& name) {
  size_t slash = token.find('/');
  std::string head = slash == std::string::npos ? token : token.substr(0, slash);
  int idx;
  try {
    idx = std::stoi(head);
  } catch (const std::exception&) {
    throw Error(ErrorKind::ParseError, "mesh-core", name + ": bad face index '" + token + "'");
  }
  if (idx < 0) idx = static_cast<int>(vertex_count) + idx;  // negative = relative
  else idx -= 1;                                            // OBJ is 1-based
  if (idx < 0 || idx >= static_cast<int>(vertex_count))
    throw Error(ErrorKind::ParseError, "mesh-core", name + ": face index out of range");
  return idx;
}

}  // namespace

TriangleMesh parse_obj(std::istream& in, const std::string& name) {
  std::vector<Vec3> vertices;
  std::vector<std::array<int, 3>> faces;
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    std::istringstream ls(line);
    std::string tag;
    if (!(ls >> tag) || tag[0] == '#') continue;
    if (tag == "v") {
      double x, y, z;
      if (!(ls >> x >> y >> z))
        throw Error(ErrorKind::ParseError, "mesh-core",
                    name + ":" + std::to_string(lineno) + ": bad vertex record");
      vertices.emplace_back(x, y, z);
    } else if (tag == "f") {
      std::vector<int> poly;
      std::string token;
      while (ls >> token) poly.push_back(parse_face_index(token, vertices.size(), name));
      if (poly.size() < 3)
        throw Error(ErrorKind::ParseError, "mesh-core",
                    name + ":" + std::to_string(lineno) + ": face with fewer than 3 vertices");
      for (size_t i = 1; i + 1 < poly.size(); ++i)
        faces.push_back({poly[0], poly[i], poly[i + 1]});
    }
    // vn/vt/usemtl/etc. ignored
  }
  if (vertices.empty() || faces.empty())
    throw Error(ErrorKind::ParseError, "mesh-core", name + ": no geometry found");
  return TriangleMesh(std::move(vertices), std::move(faces));
}

TriangleMesh load_mesh(const std::string& path) {
  std::ifstream in(path);
  if (!in)
    throw Error(ErrorKind::ParseError, "mesh-core", "cannot open '" + path + "'");
  return parse_obj(in, path);
}

void save_obj(const TriangleMesh& mesh, const std::string& path) {
  std::ofstream out(path);
  if (!out)
    throw Error(ErrorKind::IoError, "mesh-core", "cannot write '" + path + "'");
  out.precision(17);
  for (const auto& p : mesh.positions())
    out << "v " << p.x() << " " << p.y() << " " << p.z() << "\n";
  for (const auto& f : mesh.faces())
    out << "f " << f[0] + 1 << " " << f[1] + 1 << " " << f[2] + 1 << "\n";
}

}  // namespace amigo
