#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "invcurve/forms/forms.hpp"
#include "invcurve/vectorfield/vectorfield.hpp"

namespace invcurve {

// X' = X(aY + b), Y' = Y(cX + d) (Classical) or Y' = Y(cX + dY) (TwoD)
struct LVSystem {
  enum class Variant { Classical, TwoD };
  Scalar a, b, c, d;
  Variant variant = Variant::Classical;

  static LVSystem make(const Scalar& a, const Scalar& b, const Scalar& c, const Scalar& d,
                       Variant variant = Variant::Classical);
  VectorField field() const;
  std::string to_string() const;
};

struct ScaleTransform {
  LVSystem target;
  // new coordinates in terms of the old ones
  std::map<std::string, MultiPoly> map;
};

ScaleTransform lv_scale_transform(const LVSystem& sys);
LVSystem lv_swap_transform(const LVSystem& sys);

// F(Z)' = sum c_i G_i(Z)'/G_i(Z) with polynomials in Z and Zp = Z'
struct BrestovskiSystem {
  MultiPoly f;
  std::vector<std::pair<Scalar, MultiPoly>> terms;
  // x and y as functions on the (Z, Zp) plane
  RatFunc recover_x;
  RatFunc recover_y;

  static const std::vector<std::string>& variables();
  // Z' = Zp, Zp' = Z'' solved from the equation
  VectorField phase_field() const;
};

BrestovskiSystem brestovski_reduce(const Scalar& b, const Scalar& d);
// dF/F' ^ sum c_i dG_i/G_i on the phase plane
DForm omega1_form(const BrestovskiSystem& sys);

struct OrthoDefinitions {
  Scalar A, B, C, D, G;
};

struct OrthoSystem {
  OrthoDefinitions defs;
  MultiPoly poly;  // in u, v
};

// x' computed from x = Au + Bv + d1 G, y = Cu + Dv + b1 G in two ways
OrthoSystem ortho_coefficient_system(const Scalar& b1, const Scalar& d1, const Scalar& b2, const Scalar& d2,
                                     const Scalar& e, const Scalar& f);
// the same polynomial assembled coefficient by coefficient from the closed expressions
MultiPoly ortho_coefficient_display(const OrthoDefinitions& defs, const Scalar& b1, const Scalar& d1,
                                    const Scalar& b2, const Scalar& d2);

struct TransformSolution {
  enum class Case { Direct, Swapped };
  Case tag;
  Scalar e;
  Scalar f;
  // each entry vanishes on the branch
  std::vector<Scalar> constraints;
};

const char* case_name(TransformSolution::Case c);

std::vector<TransformSolution> enumerate_transform_solutions(const Scalar& b1, const Scalar& d1, const Scalar& b2,
                                                             const Scalar& d2);

struct Point2 {
  double x;
  double y;
};

Point2 varma_solution(const LVSystem& sys, double alpha, double beta, double t);
Point2 varma_solution(double a, double b, double c, double alpha, double beta, double t);
// |x' - x(ay+b)| and |y' - y(cx+b)| with centered differences of step h
Point2 varma_residual(double a, double b, double c, double alpha, double beta, double t, double h = 1e-5);

}  // namespace invcurve
