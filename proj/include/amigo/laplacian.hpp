#pragma once

#include <Eigen/Sparse>

#include "amigo/mesh.hpp"

namespace amigo {

// Positive semi-definite cotangent stiffness matrix:
// L_ii = sum_j w_ij, L_ij = -w_ij with w_ij = (cot a_ij + cot b_ij) / 2.
inline Eigen::SparseMatrix<double> cotan_laplacian(const TriangleMesh& mesh) {
  const int nv = mesh.vertex_count();
  std::vector<Eigen::Triplet<double>> trip;
  trip.reserve(mesh.face_count() * 12);
  for (int f = 0; f < mesh.face_count(); ++f) {
    const auto& t = mesh.face(f);
    const Vec3& p0 = mesh.position(t[0]);
    const Vec3& p1 = mesh.position(t[1]);
    const Vec3& p2 = mesh.position(t[2]);
    double area = mesh.face_area(f);
    // cot of the angle at corner c, opposite edge (c+1, c+2)
    for (int c = 0; c < 3; ++c) {
      const Vec3& a = c == 0 ? p0 : (c == 1 ? p1 : p2);
      const Vec3& b = c == 0 ? p1 : (c == 1 ? p2 : p0);
      const Vec3& d = c == 0 ? p2 : (c == 1 ? p0 : p1);
      double cot = (b - a).dot(d - a) / (2.0 * area);
      int i = t[(c + 1) % 3], j = t[(c + 2) % 3];
      double w = 0.5 * cot;
      trip.emplace_back(i, j, -w);
      trip.emplace_back(j, i, -w);
      trip.emplace_back(i, i, w);
      trip.emplace_back(j, j, w);
    }
  }
  Eigen::SparseMatrix<double> L(nv, nv);
  L.setFromTriplets(trip.begin(), trip.end());
  return L;
}

// Lumped (barycentric) mass matrix.
inline Eigen::SparseMatrix<double> mass_matrix(const TriangleMesh& mesh) {
  const int nv = mesh.vertex_count();
  std::vector<Eigen::Triplet<double>> trip;
  trip.reserve(nv);
  for (int v = 0; v < nv; ++v) trip.emplace_back(v, v, mesh.vertex_area(v));
  Eigen::SparseMatrix<double> M(nv, nv);
  M.setFromTriplets(trip.begin(), trip.end());
  return M;
}

}  // namespace amigo
