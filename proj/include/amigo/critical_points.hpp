#pragma once

#include <vector>

#include "amigo/scalar_field.hpp"

namespace amigo {

struct CriticalPoints {
  std::vector<int> minima;
  std::vector<int> saddles;              // unique vertices, ascending field value
  std::vector<int> saddle_multiplicity;  // parallel to saddles; simple saddle = 1
  std::vector<int> maxima;

  int saddle_weight() const {
    int w = 0;
    for (int m : saddle_multiplicity) w += m;
    return w;
  }
  // Multiplicity-weighted Morse count: #min - #saddles + #max.
  int euler_count() const {
    return static_cast<int>(minima.size()) - saddle_weight() + static_cast<int>(maxima.size());
  }
  bool is_critical(int v) const;
};

// Classifies vertices by sign alternations of f around the ordered one-ring.
// Exact ties are broken by index-scaled perturbation (f + 1e-12 * index).
CriticalPoints classify_critical_points(const ScalarField& field);

}  // namespace amigo
