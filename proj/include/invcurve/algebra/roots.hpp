#pragma once

#include <gmpxx.h>

#include <string>
#include <vector>

#include "invcurve/algebra/multipoly.hpp"

namespace invcurve {

struct RootExtraction {
  std::vector<Scalar> roots;  // distinct
  std::vector<unsigned> multiplicities;
  // degree of the cofactor left after removing every found root with multiplicity
  unsigned residual_degree = 0;
  // false when part of the residual could still hide roots in the coefficient field
  bool certified = true;
};

// Roots in Q(params) of sum coeffs[k] t^k. The zero polynomial is rejected.
RootExtraction rational_roots(const std::vector<Scalar>& coeffs);
RootExtraction rational_roots(const MultiPoly& f, const std::string& var);

// Rational roots of a polynomial with rational coefficients (index = power), distinct.
std::vector<mpq_class> rational_roots_q(std::vector<mpq_class> coeffs);

// simplest rational in the closed interval [lo, hi]
mpq_class simplest_rational(const mpq_class& lo, const mpq_class& hi);

}  // namespace invcurve
