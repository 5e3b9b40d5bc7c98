#include "amigo/curvature.hpp"

#include <cmath>
#include <numbers>
#include <set>

#include <Eigen/Dense>
#include <Eigen/Sparse>
#include <Eigen/SparseCholesky>

#include "amigo/laplacian.hpp"

namespace amigo {

namespace {

// Interior angle at corner c of face f.
double corner_angle(const TriangleMesh& mesh, int f, int c) {
  const auto& t = mesh.face(f);
  const Vec3& p = mesh.position(t[c]);
  Vec3 u = mesh.position(t[(c + 1) % 3]) - p;
  Vec3 v = mesh.position(t[(c + 2) % 3]) - p;
  double d = u.dot(v) / (u.norm() * v.norm());
  return std::acos(std::clamp(d, -1.0, 1.0));
}

}  // namespace

double CurvatureField::normal_curvature(int v, const Vec3& d) const {
  Vec3 n = dir1[v].cross(dir2[v]);
  Vec3 t = d - d.dot(n) * n;
  double len = t.norm();
  if (len < 1e-12) return 0.5 * (k1[v] + k2[v]);
  t /= len;
  double c1 = t.dot(dir1[v]);
  double c2 = t.dot(dir2[v]);
  return k1[v] * c1 * c1 + k2[v] * c2 * c2;
}

CurvatureField compute_curvatures(const TriangleMesh& mesh) {
  const int nv = mesh.vertex_count();
  CurvatureField out;
  out.gaussian.assign(nv, 0.0);
  out.mean.assign(nv, 0.0);
  out.k1.assign(nv, 0.0);
  out.k2.assign(nv, 0.0);
  out.dir1.assign(nv, Vec3::UnitX());
  out.dir2.assign(nv, Vec3::UnitY());

  // Gaussian: angle defect over lumped area.
  std::vector<double> defect(nv, 2.0 * std::numbers::pi);
  for (int f = 0; f < mesh.face_count(); ++f)
    for (int c = 0; c < 3; ++c) defect[mesh.face(f)[c]] -= corner_angle(mesh, f, c);
  for (int v = 0; v < nv; ++v) {
    double area = mesh.vertex_area(v);
    if (area < 1e-300)
      throw Error(ErrorKind::DegenerateStar, "mesh-core", "vertex with collapsed one-ring");
    out.gaussian[v] = defect[v] / area;
  }

  // Mean: K(p) = (1/2A) sum cot-weighted edge differences, K = 2 H n_out.
  Eigen::SparseMatrix<double> L = cotan_laplacian(mesh);
  Eigen::MatrixXd P(nv, 3);
  for (int v = 0; v < nv; ++v) P.row(v) = mesh.position(v).transpose();
  Eigen::MatrixXd K = L * P;  // row v = sum_j w_vj (p_v - p_j)
  for (int v = 0; v < nv; ++v) {
    Vec3 k = K.row(v).transpose() / (2.0 * mesh.vertex_area(v));
    out.mean[v] = 0.5 * k.dot(mesh.vertex_normal(v));
  }

  // Principal curvatures from a quadric fit of the two-ring height field.
  for (int v = 0; v < nv; ++v) {
    Vec3 n = mesh.vertex_normal(v);
    Vec3 e1 = n.cross(std::abs(n.z()) < 0.9 ? Vec3::UnitZ() : Vec3::UnitX()).normalized();
    Vec3 e2 = n.cross(e1);

    std::set<int> nbrs;
    for (int u : mesh.vertex_ring(v)) {
      nbrs.insert(u);
      for (int w : mesh.vertex_ring(u))
        if (w != v) nbrs.insert(w);
    }

    // w(u1,u2) ~ 1/2 (a u1^2 + 2 b u1 u2 + c u2^2) + d u1 + e u2
    Eigen::MatrixXd A(nbrs.size(), 5);
    Eigen::VectorXd b(nbrs.size());
    int row = 0;
    for (int u : nbrs) {
      Vec3 r = mesh.position(u) - mesh.position(v);
      double x = r.dot(e1), y = r.dot(e2), h = r.dot(n);
      A.row(row) << 0.5 * x * x, x * y, 0.5 * y * y, x, y;
      b(row) = h;
      ++row;
    }
    Eigen::VectorXd sol = (A.transpose() * A).ldlt().solve(A.transpose() * b);

    // Height is measured along the outward normal, so convex = negative fit.
    Eigen::Matrix2d S;
    S << -sol(0), -sol(1), -sol(1), -sol(2);
    Eigen::SelfAdjointEigenSolver<Eigen::Matrix2d> eig(S);
    double ka = eig.eigenvalues()(0), kb = eig.eigenvalues()(1);
    Eigen::Vector2d va = eig.eigenvectors().col(0), vb = eig.eigenvectors().col(1);
    if (std::abs(ka) < std::abs(kb)) {
      std::swap(ka, kb);
      std::swap(va, vb);
    }
    out.k1[v] = ka;
    out.k2[v] = kb;
    out.dir1[v] = (va.x() * e1 + va.y() * e2).normalized();
    out.dir2[v] = (vb.x() * e1 + vb.y() * e2).normalized();
  }

  return out;
}

CraterSmoothResult smooth_craters(const TriangleMesh& mesh, const CurvatureField& curv,
                                  double time_step, int max_iters) {
  const int nv = mesh.vertex_count();

  auto crater_set = [&](const CurvatureField& c) {
    std::vector<int> flagged;
    for (int v = 0; v < nv; ++v)
      if (c.mean[v] < 0.0 && c.gaussian[v] > 0.0) flagged.push_back(v);
    return flagged;
  };

  CraterSmoothResult result{mesh, 0, true, 0, crater_set(curv)};
  if (result.initial_crater_vertices.empty()) return result;

  // Conformal flavour: the cotan weights stay fixed at the input mesh.
  Eigen::SparseMatrix<double> L0 = cotan_laplacian(mesh);

  TriangleMesh current = mesh;
  CurvatureField cur_curv = curv;
  for (int iter = 0; iter < max_iters; ++iter) {
    std::vector<int> craters = crater_set(cur_curv);
    if (craters.empty()) {
      result.mesh = current.normalized_area();
      result.iterations = iter;
      return result;
    }

    // Dilate by one ring; everything outside is pinned.
    std::vector<char> flow(nv, 0);
    for (int v : craters) {
      flow[v] = 1;
      for (int u : current.vertex_ring(v)) flow[u] = 1;
    }

    // Implicit Euler on the flowing set: (M + dt L) p' = M p, pinned rows
    // replaced by identity.
    Eigen::SparseMatrix<double> M(nv, nv);
    {
      std::vector<Eigen::Triplet<double>> trip;
      trip.reserve(nv);
      for (int v = 0; v < nv; ++v) trip.emplace_back(v, v, current.vertex_area(v));
      M.setFromTriplets(trip.begin(), trip.end());
    }
    Eigen::SparseMatrix<double> A = M + time_step * L0;
    std::vector<Eigen::Triplet<double>> trip;
    for (int k = 0; k < A.outerSize(); ++k)
      for (Eigen::SparseMatrix<double>::InnerIterator it(A, k); it; ++it)
        if (flow[it.row()]) trip.emplace_back(it.row(), it.col(), it.value());
    for (int v = 0; v < nv; ++v)
      if (!flow[v]) trip.emplace_back(v, v, 1.0);
    Eigen::SparseMatrix<double> Apinned(nv, nv);
    Apinned.setFromTriplets(trip.begin(), trip.end());

    Eigen::MatrixXd rhs(nv, 3);
    for (int v = 0; v < nv; ++v) {
      if (flow[v])
        rhs.row(v) = current.vertex_area(v) * current.position(v).transpose();
      else
        rhs.row(v) = current.position(v).transpose();
    }

    Eigen::SparseLU<Eigen::SparseMatrix<double>> solver(Apinned);
    if (solver.info() != Eigen::Success)
      throw Error(ErrorKind::SolverFailure, "mesh-core", "crater flow system is singular");
    Eigen::MatrixXd P = solver.solve(rhs);

    std::vector<Vec3> next(nv);
    for (int v = 0; v < nv; ++v) next[v] = P.row(v).transpose();
    current = TriangleMesh(std::move(next), current.faces());
    cur_curv = compute_curvatures(current);
  }

  std::vector<int> remaining = crater_set(cur_curv);
  result.mesh = current.normalized_area();
  result.iterations = max_iters;
  result.converged = remaining.empty();
  result.remaining_crater_vertices = static_cast<int>(remaining.size());
  return result;
}

}  // namespace amigo
