#pragma once

#include <string>
#include <utility>
#include <vector>

#include "invcurve/algebra/multipoly.hpp"

namespace invcurve {

struct PlanarSolutions {
  std::vector<std::pair<Scalar, Scalar>> points;
  // some projection roots were not rational, so solutions may have been dropped
  bool nonrational_discarded = false;
  // false when a symbolic factor of degree >= 3 could not be resolved
  bool certified = true;
};

// Common zeros with coordinates in Q(params) of polynomials in (x, y), via resultants.
// Throws PositiveDimensionalSingularLocus when the zero set contains a curve.
PlanarSolutions solve_planar_system(const std::vector<MultiPoly>& equations,
                                    const std::string& x, const std::string& y);

}  // namespace invcurve
