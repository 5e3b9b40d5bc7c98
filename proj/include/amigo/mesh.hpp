#pragma once

#include <array>
#include <string>
#include <vector>

#include <Eigen/Core>

#include "amigo/error.hpp"

namespace amigo {

using Vec3 = Eigen::Vector3d;

// Closed manifold triangle mesh with derived incidence maps.
//
// Faces are CCW when viewed from outside. Adjacency is stored as a compact
// half-edge table: half-edge h lives in face h/3 at corner h%3, runs from
// vertex face[h/3][h%3] to face[h/3][(h%3+1)%3], and twin(h) is the opposite
// half-edge in the neighbouring face.
class TriangleMesh {
public:
  TriangleMesh() = default;
  TriangleMesh(std::vector<Vec3> vertices, std::vector<std::array<int, 3>> faces);

  int vertex_count() const { return static_cast<int>(positions_.size()); }
  int face_count() const { return static_cast<int>(faces_.size()); }
  int edge_count() const { return static_cast<int>(faces_.size()) * 3 / 2; }
  int euler_characteristic() const { return vertex_count() - edge_count() + face_count(); }
  int genus() const { return (2 - euler_characteristic()) / 2; }

  const std::vector<Vec3>& positions() const { return positions_; }
  const Vec3& position(int v) const { return positions_[v]; }
  const std::vector<std::array<int, 3>>& faces() const { return faces_; }
  const std::array<int, 3>& face(int f) const { return faces_[f]; }

  // Half-edge navigation.
  int halfedge_count() const { return static_cast<int>(twin_.size()); }
  static int he_face(int h) { return h / 3; }
  static int he_next(int h) { return (h / 3) * 3 + (h % 3 + 1) % 3; }
  int he_from(int h) const { return faces_[h / 3][h % 3]; }
  int he_to(int h) const { return faces_[h / 3][(h % 3 + 1) % 3]; }
  int he_twin(int h) const { return twin_[h]; }
  // Some outgoing half-edge of v.
  int vertex_halfedge(int v) const { return vertex_he_[v]; }

  // One-ring neighbours of v in CCW order (closed fan on a closed mesh).
  const std::vector<int>& vertex_ring(int v) const { return rings_[v]; }
  // Faces incident to v, CCW, aligned with vertex_ring.
  const std::vector<int>& vertex_faces(int v) const { return ring_faces_[v]; }

  // Face f adjacent to face across the edge opposite corner c, or -1.
  int face_neighbor(int f, int c) const {
    int t = twin_[3 * f + c];
    return t < 0 ? -1 : t / 3;
  }

  double face_area(int f) const;
  Vec3 face_normal(int f) const;  // unit
  Vec3 face_centroid(int f) const;
  double total_area() const;
  // Area-weighted outward vertex normal (unit).
  Vec3 vertex_normal(int v) const;
  // Barycentric lumped vertex area (one third of incident face areas).
  double vertex_area(int v) const;
  double mean_edge_length() const;

  // Uniform scale applied by normalize_area relative to the loaded input.
  double unit_scale() const { return unit_scale_; }

  // Returns a uniformly scaled copy with total surface area 1.
  TriangleMesh normalized_area() const;

private:
  void build_adjacency();

  std::vector<Vec3> positions_;
  std::vector<std::array<int, 3>> faces_;
  std::vector<int> twin_;       // per half-edge
  std::vector<int> vertex_he_;  // an outgoing half-edge per vertex
  std::vector<std::vector<int>> rings_;
  std::vector<std::vector<int>> ring_faces_;
  double unit_scale_ = 1.0;
};

// OBJ I/O. Reads v/f records, triangulates polygons by fanning, ignores
// vn/vt. Throws ParseError / NotClosed / NonManifold.
TriangleMesh load_mesh(const std::string& path);
TriangleMesh parse_obj(std::istream& in, const std::string& name);
void save_obj(const TriangleMesh& mesh, const std::string& path);

}  // namespace amigo
