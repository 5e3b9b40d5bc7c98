#include "amigo/critical_points.hpp"

#include <algorithm>

namespace amigo {

double ScalarField::min() const { return *std::min_element(values.begin(), values.end()); }
double ScalarField::max() const { return *std::max_element(values.begin(), values.end()); }

Vec3 ScalarField::face_gradient(int f) const {
  const auto& t = mesh->face(f);
  Vec3 n = mesh->face_normal(f);
  double area = mesh->face_area(f);
  Vec3 g = Vec3::Zero();
  for (int c = 0; c < 3; ++c) {
    // edge opposite corner c, CCW
    Vec3 e = mesh->position(t[(c + 2) % 3]) - mesh->position(t[(c + 1) % 3]);
    g += values[t[c]] * n.cross(e);
  }
  return g / (2.0 * area);
}

double ScalarField::at_bary(int f, const Vec3& bary) const {
  const auto& t = mesh->face(f);
  return bary[0] * values[t[0]] + bary[1] * values[t[1]] + bary[2] * values[t[2]];
}

bool CriticalPoints::is_critical(int v) const {
  auto has = [v](const std::vector<int>& xs) {
    return std::find(xs.begin(), xs.end(), v) != xs.end();
  };
  return has(minima) || has(saddles) || has(maxima);
}

CriticalPoints classify_critical_points(const ScalarField& field) {
  const TriangleMesh& mesh = *field.mesh;
  const int nv = mesh.vertex_count();

  // Simulated simplicity: compare perturbed values so no two vertices tie.
  auto value = [&](int v) { return field.values[v] + 1e-12 * v; };

  CriticalPoints out;
  std::vector<std::pair<double, int>> saddle_order;
  for (int v = 0; v < nv; ++v) {
    const auto& ring = mesh.vertex_ring(v);
    int alternations = 0;
    bool any_above = false, any_below = false;
    const int deg = static_cast<int>(ring.size());
    for (int k = 0; k < deg; ++k) {
      bool above_k = value(ring[k]) > value(v);
      bool above_n = value(ring[(k + 1) % deg]) > value(v);
      (above_k ? any_above : any_below) = true;
      if (above_k != above_n) ++alternations;
    }
    if (!any_below) {
      out.minima.push_back(v);
    } else if (!any_above) {
      out.maxima.push_back(v);
    } else if (alternations >= 4) {
      saddle_order.emplace_back(field.values[v], v);
      out.saddle_multiplicity.push_back((alternations - 2) / 2);
    }
  }

  // Stable ascending order by (value, index); multiplicities follow.
  std::vector<int> perm(saddle_order.size());
  for (size_t i = 0; i < perm.size(); ++i) perm[i] = static_cast<int>(i);
  std::sort(perm.begin(), perm.end(), [&](int a, int b) {
    return saddle_order[a] < saddle_order[b];
  });
  std::vector<int> mult = out.saddle_multiplicity;
  out.saddles.clear();
  out.saddle_multiplicity.clear();
  for (int i : perm) {
    out.saddles.push_back(saddle_order[i].second);
    out.saddle_multiplicity.push_back(mult[i]);
  }
  return out;
}

}  // namespace amigo
