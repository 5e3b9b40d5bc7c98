#pragma once

#include <vector>

#include "amigo/mesh.hpp"

namespace amigo {

// Per-vertex curvature data. Sign convention: positive mean/normal curvature
// for convex regions w.r.t. the outward normal (unit sphere has gaussian = 1,
// mean = 1).
struct CurvatureField {
  std::vector<double> gaussian;  // angle defect / vertex area
  std::vector<double> mean;      // signed, from the cotan mean-curvature normal
  // Principal curvatures with |k1| >= |k2| and their unit tangent directions.
  std::vector<double> k1, k2;
  std::vector<Vec3> dir1, dir2;

  // Normal curvature at vertex v in (tangent-projected) direction d.
  double normal_curvature(int v, const Vec3& d) const;
};

CurvatureField compute_curvatures(const TriangleMesh& mesh);

struct CraterSmoothResult {
  TriangleMesh mesh;
  int iterations = 0;
  bool converged = true;
  int remaining_crater_vertices = 0;
  // Vertices flagged as craters (mean < 0 and gaussian > 0) before smoothing.
  std::vector<int> initial_crater_vertices;
};

// Localized conformal mean-curvature flow: vertices inside crater regions
// (negative mean AND positive Gaussian curvature, dilated by one ring) take
// implicit flow steps while all others stay fixed. Stops when no crater
// vertex remains or max_iters is reached; the result is re-normalized to
// unit area.
CraterSmoothResult smooth_craters(const TriangleMesh& mesh, const CurvatureField& curv,
                                  double time_step = 1e-3, int max_iters = 200);

}  // namespace amigo
