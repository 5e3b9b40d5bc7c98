#include "amigo/mesh.hpp"

#include <cmath>
#include <map>
#include <utility>

namespace amigo {

const char* to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::ParseError: return "ParseError";
    case ErrorKind::NotClosed: return "NotClosed";
    case ErrorKind::NonManifold: return "NonManifold";
    case ErrorKind::DegenerateStar: return "DegenerateStar";
    case ErrorKind::NotConverged: return "NotConverged";
    case ErrorKind::SolverFailure: return "SolverFailure";
    case ErrorKind::SliceDegenerate: return "SliceDegenerate";
    case ErrorKind::NoPath: return "NoPath";
    case ErrorKind::EmptyRow: return "EmptyRow";
    case ErrorKind::EmptyJointRow: return "EmptyJointRow";
    case ErrorKind::NotCoupled: return "NotCoupled";
    case ErrorKind::StitchCountMismatch: return "StitchCountMismatch";
    case ErrorKind::Diverged: return "Diverged";
    case ErrorKind::IoError: return "IoError";
    case ErrorKind::InvalidArgument: return "InvalidArgument";
  }
  return "Unknown";
}

TriangleMesh::TriangleMesh(std::vector<Vec3> vertices, std::vector<std::array<int, 3>> faces)
    : positions_(std::move(vertices)), faces_(std::move(faces)) {
  build_adjacency();
}

void TriangleMesh::build_adjacency() {
  const int nf = face_count();
  const int nv = vertex_count();
  for (int f = 0; f < nf; ++f) {
    for (int c = 0; c < 3; ++c) {
      int v = faces_[f][c];
      if (v < 0 || v >= nv)
        throw Error(ErrorKind::ParseError, "mesh-core", "face references vertex out of range");
    }
    const auto& t = faces_[f];
    if (t[0] == t[1] || t[1] == t[2] || t[0] == t[2])
      throw Error(ErrorKind::NonManifold, "mesh-core", "face with repeated vertex");
    if (face_area(f) <= 0.0)
      throw Error(ErrorKind::NonManifold, "mesh-core", "degenerate zero-area face");
  }

  // Match each directed edge with its reverse. A repeated directed edge means
  // inconsistent orientation or a non-manifold fan.
  std::map<std::pair<int, int>, int> directed;
  twin_.assign(3 * nf, -1);
  for (int h = 0; h < 3 * nf; ++h) {
    auto key = std::make_pair(he_from(h), he_to(h));
    if (!directed.emplace(key, h).second)
      throw Error(ErrorKind::NonManifold, "mesh-core",
                  "directed edge repeated (non-manifold or inconsistent orientation)");
  }
  for (auto& [key, h] : directed) {
    auto it = directed.find({key.second, key.first});
    if (it == directed.end())
      throw Error(ErrorKind::NotClosed, "mesh-core", "boundary edge found; mesh is not closed");
    twin_[h] = it->second;
  }

  vertex_he_.assign(nv, -1);
  for (int h = 0; h < 3 * nf; ++h)
    if (vertex_he_[he_from(h)] < 0) vertex_he_[he_from(h)] = h;
  for (int v = 0; v < nv; ++v)
    if (vertex_he_[v] < 0)
      throw Error(ErrorKind::NonManifold, "mesh-core", "isolated vertex");

  // Ordered one-rings by walking twin(next(next(h))) around each vertex.
  rings_.assign(nv, {});
  ring_faces_.assign(nv, {});
  for (int v = 0; v < nv; ++v) {
    int h0 = vertex_he_[v];
    int h = h0;
    int guard = 0;
    do {
      rings_[v].push_back(he_to(h));
      ring_faces_[v].push_back(he_face(h));
      h = he_twin(he_next(he_next(h)));  // next outgoing half-edge CCW
      if (++guard > 3 * nf)
        throw Error(ErrorKind::NonManifold, "mesh-core", "vertex fan does not close");
    } while (h != h0);
  }
}

double TriangleMesh::face_area(int f) const {
  const auto& t = faces_[f];
  return 0.5 * (positions_[t[1]] - positions_[t[0]]).cross(positions_[t[2]] - positions_[t[0]]).norm();
}

Vec3 TriangleMesh::face_normal(int f) const {
  const auto& t = faces_[f];
  Vec3 n = (positions_[t[1]] - positions_[t[0]]).cross(positions_[t[2]] - positions_[t[0]]);
  double len = n.norm();
  return len > 0 ? Vec3(n / len) : Vec3(0, 0, 1);
}

Vec3 TriangleMesh::face_centroid(int f) const {
  const auto& t = faces_[f];
  return (positions_[t[0]] + positions_[t[1]] + positions_[t[2]]) / 3.0;
}

double TriangleMesh::total_area() const {
  double a = 0;
  for (int f = 0; f < face_count(); ++f) a += face_area(f);
  return a;
}

Vec3 TriangleMesh::vertex_normal(int v) const {
  Vec3 n = Vec3::Zero();
  for (int f : ring_faces_[v]) n += face_area(f) * face_normal(f);
  double len = n.norm();
  return len > 0 ? Vec3(n / len) : Vec3(0, 0, 1);
}

double TriangleMesh::vertex_area(int v) const {
  double a = 0;
  for (int f : ring_faces_[v]) a += face_area(f);
  return a / 3.0;
}

double TriangleMesh::mean_edge_length() const {
  double sum = 0;
  int count = 0;
  for (int h = 0; h < halfedge_count(); ++h) {
    if (he_from(h) < he_to(h)) {
      sum += (positions_[he_from(h)] - positions_[he_to(h)]).norm();
      ++count;
    }
  }
  return count > 0 ? sum / count : 0.0;
}

TriangleMesh TriangleMesh::normalized_area() const {
  double area = total_area();
  double s = 1.0 / std::sqrt(area);
  std::vector<Vec3> scaled(positions_.size());
  for (size_t i = 0; i < positions_.size(); ++i) scaled[i] = positions_[i] * s;
  TriangleMesh out(std::move(scaled), faces_);
  out.unit_scale_ = unit_scale_ * s;
  return out;
}

}  // namespace amigo
