#pragma once

#include <stdexcept>
#include <vector>

#include "invcurve/algebra/multipoly.hpp"

namespace oracles {

// The enumeration gave up: the cofactor solution set is not finite or a pencil appeared.
struct OracleUnsupported : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Irreducible-by-construction invariant polynomials of the planar field (p, q) with
// rational coefficients, up to max_degree, found by solving L(P) = K P with every
// coefficient of K and P unknown. Products of lower degree solutions are dropped.
std::vector<invcurve::MultiPoly> brute_force_invariant_curves(const invcurve::MultiPoly& p,
                                                              const invcurve::MultiPoly& q,
                                                              unsigned max_degree);

}  // namespace oracles
