#pragma once

#include <string>
#include <vector>

#include "invcurve/vectorfield/vectorfield.hpp"

namespace invcurve {

struct DefinitionField {
  enum class Kind { Constants, DiffParam };
  Kind kind = Kind::Constants;
  std::string diff_param;  // set for Kind::DiffParam

  std::string to_string() const;
};

struct InvariantCurve {
  MultiPoly poly;
  MultiPoly cofactor;
  DefinitionField field;
};

// a family of invariant curves sharing one cofactor: a rational first integral
struct Pencil {
  MultiPoly cofactor;
  std::vector<MultiPoly> basis;
};

enum class Completeness { CompleteUpToBound, Partial };

struct DarbouxReport {
  unsigned degree_bound = 0;
  std::vector<InvariantCurve> curves;
  Completeness completeness = Completeness::CompleteUpToBound;
  // polynomials in the parameters whose vanishing may change the answer
  std::vector<Scalar> branching_conditions;
  std::vector<Pencil> pencils;
  std::vector<std::string> caveats;
};

const char* completeness_name(Completeness c);

DarbouxReport darboux_search(const VectorField& s, unsigned max_degree);

// cX - aY - z with z' = bz, invariant for X' = X(aY + b), Y' = Y(cX + b)
InvariantCurve invariant_family_b_eq_d(const Scalar& a, const Scalar& b, const Scalar& c);

// multiply every component by the lcm of the denominators (a time reparametrization)
VectorField clear_denominators(const VectorField& s);

}  // namespace invcurve
