#pragma once

#include "amigo/critical_points.hpp"
#include "amigo/scalar_field.hpp"

namespace amigo {

// Heat-method geodesic distance from a single seed vertex: diffuse for time
// t, normalize the gradient, solve the Poisson problem, shift so the seed is
// at zero.
ScalarField heat_geodesic(const TriangleMesh& mesh, int seed, double t);

// Recommended default diffusion time: mean edge length squared.
double default_heat_time(const TriangleMesh& mesh);

struct TunedField {
  ScalarField field;
  double time = 0.0;
  int doublings = 0;
  bool clean = true;  // false if 10 doublings were exhausted
  CriticalPoints criticals;
};

// Doubles t until no critical vertex sits in the one-ring of another, up to
// 10 doublings; returns the best attempt otherwise.
TunedField tune_time_parameter(const TriangleMesh& mesh, int seed);

}  // namespace amigo
