#pragma once

#include <vector>

#include "amigo/mesh.hpp"

namespace amigo {

// Piecewise-linear per-vertex function on a mesh.
struct ScalarField {
  const TriangleMesh* mesh = nullptr;
  std::vector<double> values;

  double operator[](int v) const { return values[v]; }
  double min() const;
  double max() const;

  // Per-face intrinsic gradient of the PL interpolation.
  Vec3 face_gradient(int f) const;
  // Linear interpolation at barycentric coordinates of face f.
  double at_bary(int f, const Vec3& bary) const;
};

}  // namespace amigo
