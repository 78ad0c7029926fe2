#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "invcurve/algebra/linalg.hpp"
#include "invcurve/algebra/ratfunc.hpp"

namespace invcurve {

// Symbol with a prescribed derivative: z' = c*z (Log) or z' = c (Const).
struct DiffParam {
  enum class Mode { Log, Const };
  std::string name;
  Mode mode = Mode::Log;
  Scalar coefficient;

  Scalar derivative() const;
};

class VectorField {
 public:
  VectorField() = default;
  VectorField(std::vector<std::string> vars, std::vector<RatFunc> components,
              std::vector<DiffParam> diff_params = {});

  const std::vector<std::string>& variables() const { return vars_; }
  const std::vector<RatFunc>& components() const { return components_; }
  const std::vector<DiffParam>& diff_params() const { return diff_params_; }
  std::size_t dimension() const { return vars_.size(); }
  const DiffParam* find_diff_param(const std::string& name) const;

  bool is_polynomial() const;
  MultiPoly polynomial_component(std::size_t i) const;
  // maximal total degree over polynomial components
  unsigned degree() const;

  VectorField substitute_parameters(const std::map<Symbol, Scalar>& values) const;
  std::string to_string() const;

 private:
  std::vector<std::string> vars_;
  std::vector<RatFunc> components_;
  std::vector<DiffParam> diff_params_;
};

// derivation induced on coefficients by the differential parameters
Scalar coefficient_derivative(const VectorField& s, const Scalar& c);

MultiPoly lie_derivative(const VectorField& s, const MultiPoly& p);
RatFunc lie_derivative(const VectorField& s, const RatFunc& f);

// cofactor L_s(p)/p when p is invariant
std::optional<MultiPoly> is_invariant(const VectorField& s, const MultiPoly& p);

struct SingularPointSet {
  std::vector<std::vector<Scalar>> points;
  bool nonrational_discarded = false;
  bool certified = true;
};

SingularPointSet singular_points(const VectorField& s);
Matrix jacobian_at(const VectorField& s, const std::vector<Scalar>& point);

}  // namespace invcurve
