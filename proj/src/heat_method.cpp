#include "amigo/heat_method.hpp"

#include <cmath>

#include <Eigen/Sparse>
#include <Eigen/SparseCholesky>

#include "amigo/laplacian.hpp"

namespace amigo {

double default_heat_time(const TriangleMesh& mesh) {
  double h = mesh.mean_edge_length();
  return h * h;
}

ScalarField heat_geodesic(const TriangleMesh& mesh, int seed, double t) {
  if (seed < 0 || seed >= mesh.vertex_count())
    throw Error(ErrorKind::InvalidArgument, "geodesic-field", "seed vertex out of range");
  const int nv = mesh.vertex_count();
  Eigen::SparseMatrix<double> L = cotan_laplacian(mesh);
  Eigen::SparseMatrix<double> M = mass_matrix(mesh);

  // Step 1: heat diffusion (M + tL) u = delta_seed.
  Eigen::SparseMatrix<double> A = M + t * L;
  Eigen::SimplicialLDLT<Eigen::SparseMatrix<double>> heat(A);
  if (heat.info() != Eigen::Success)
    throw Error(ErrorKind::SolverFailure, "geodesic-field", "heat system factorization failed");
  Eigen::VectorXd delta = Eigen::VectorXd::Zero(nv);
  delta(seed) = 1.0;
  Eigen::VectorXd u = heat.solve(delta);

  // Step 2: normalized negative gradient per face.
  std::vector<Vec3> X(mesh.face_count());
  ScalarField uf{&mesh, std::vector<double>(u.data(), u.data() + nv)};
  for (int f = 0; f < mesh.face_count(); ++f) {
    Vec3 g = uf.face_gradient(f);
    double len = g.norm();
    X[f] = len > 1e-300 ? Vec3(-g / len) : Vec3::Zero();
  }

  // Step 3: integrated divergence and Poisson solve L phi = div.
  Eigen::VectorXd div = Eigen::VectorXd::Zero(nv);
  for (int f = 0; f < mesh.face_count(); ++f) {
    const auto& tri = mesh.face(f);
    double area = mesh.face_area(f);
    for (int c = 0; c < 3; ++c) {
      int i = tri[c], j = tri[(c + 1) % 3], k = tri[(c + 2) % 3];
      const Vec3& pi = mesh.position(i);
      const Vec3& pj = mesh.position(j);
      const Vec3& pk = mesh.position(k);
      double cot_k = (pi - pk).dot(pj - pk) / (2.0 * area);  // angle at k, opposite edge ij
      double contrib = 0.5 * cot_k * (pj - pi).dot(X[f]);
      div(i) += contrib;
      div(j) -= contrib;
    }
  }

  // Pin the seed to resolve the constant null space.
  std::vector<Eigen::Triplet<double>> trip;
  for (int k = 0; k < L.outerSize(); ++k)
    for (Eigen::SparseMatrix<double>::InnerIterator it(L, k); it; ++it)
      if (it.row() != seed && it.col() != seed)
        trip.emplace_back(it.row(), it.col(), it.value());
  trip.emplace_back(seed, seed, 1.0);
  Eigen::SparseMatrix<double> Lp(nv, nv);
  Lp.setFromTriplets(trip.begin(), trip.end());
  div(seed) = 0.0;

  Eigen::SimplicialLDLT<Eigen::SparseMatrix<double>> poisson(Lp);
  if (poisson.info() != Eigen::Success)
    throw Error(ErrorKind::SolverFailure, "geodesic-field", "poisson factorization failed");
  Eigen::VectorXd phi = poisson.solve(div);

  ScalarField out{&mesh, std::vector<double>(nv)};
  double shift = phi(seed);
  for (int v = 0; v < nv; ++v) out.values[v] = phi(v) - shift;
  // The Poisson solution is defined up to sign of the target field; distances
  // grow away from the seed.
  double mean = 0;
  for (int v = 0; v < nv; ++v) mean += out.values[v];
  if (mean < 0)
    for (int v = 0; v < nv; ++v) out.values[v] = -out.values[v];
  return out;
}

namespace {

int adjacent_critical_pairs(const TriangleMesh& mesh, const CriticalPoints& cp) {
  std::vector<char> critical(mesh.vertex_count(), 0);
  for (int v : cp.minima) critical[v] = 1;
  for (int v : cp.saddles) critical[v] = 1;
  for (int v : cp.maxima) critical[v] = 1;
  int pairs = 0;
  for (int v = 0; v < mesh.vertex_count(); ++v) {
    if (!critical[v]) continue;
    for (int u : mesh.vertex_ring(v))
      if (critical[u] && u > v) ++pairs;
  }
  return pairs;
}

}  // namespace

TunedField tune_time_parameter(const TriangleMesh& mesh, int seed) {
  const double t0 = default_heat_time(mesh);
  TunedField best;
  int best_pairs = -1;
  for (int k = 0; k <= 10; ++k) {
    double t = t0 * std::pow(2.0, k);
    ScalarField field = heat_geodesic(mesh, seed, t);
    CriticalPoints cp = classify_critical_points(field);
    int pairs = adjacent_critical_pairs(mesh, cp);
    if (best_pairs < 0 || pairs < best_pairs) {
      best = TunedField{std::move(field), t, k, pairs == 0, std::move(cp)};
      best_pairs = pairs;
    }
    if (pairs == 0) return best;
  }
  best.clean = false;
  return best;
}

}  // namespace amigo
