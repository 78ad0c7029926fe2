#pragma once

#include <map>
#include <string>
#include <vector>

#include "invcurve/algebra/ratfunc.hpp"
#include "invcurve/vectorfield/vectorfield.hpp"

namespace invcurve {

// Rational m-form on the coordinates vars. Keys are strictly increasing index tuples.
class DForm {
 public:
  using Index = std::vector<unsigned>;

  DForm() = default;
  DForm(std::vector<std::string> vars, unsigned arity);
  static DForm function(std::vector<std::string> vars, const RatFunc& f);
  static DForm differential(std::vector<std::string> vars, const std::string& var);
  // f dX_{i1} ^ ... ^ dX_{im} for arbitrary (possibly unsorted or repeated) indices
  static DForm term(std::vector<std::string> vars, const RatFunc& f, const Index& indices);

  const std::vector<std::string>& variables() const { return vars_; }
  unsigned arity() const { return arity_; }
  const std::map<Index, RatFunc>& coefficients() const { return coeffs_; }
  RatFunc coefficient(const Index& index) const;
  bool is_zero() const { return coeffs_.empty(); }

  DForm operator+(const DForm& o) const;
  DForm operator-(const DForm& o) const;
  DForm operator-() const;
  DForm scaled(const RatFunc& f) const;

  std::string to_string() const;

  friend bool operator==(const DForm& a, const DForm& b);
  friend bool operator!=(const DForm& a, const DForm& b) { return !(a == b); }

 private:
  void add(const Index& index, const RatFunc& f);

  std::vector<std::string> vars_;
  unsigned arity_ = 0;
  std::map<Index, RatFunc> coeffs_;
};

DForm exterior_derivative(const DForm& w);
DForm wedge(const DForm& a, const DForm& b);
// Coordinates of w must be variables of s or names of its differential parameters.
DForm interior_product(const VectorField& s, const DForm& w);
DForm lie_derivative_form(const VectorField& s, const DForm& w);
bool is_invariant_form(const VectorField& s, const DForm& w);
// dv/v
DForm log_differential(const std::vector<std::string>& vars, const RatFunc& v);

struct LogTerm {
  Scalar coefficient;
  RatFunc argument;
};

// du + sum c_i dv_i/v_i
struct LogCombination {
  std::vector<std::string> vars;
  RatFunc exact_part;
  std::vector<LogTerm> log_terms;

  DForm to_form() const;
};

// Rewrites the log part so that its coefficients are linearly independent over Q.
// Every coefficient must be a Q-linear combination of 1 and the symbols in basis.
LogCombination rosenlicht_normalize(const LogCombination& lc, const std::vector<std::string>& basis);

}  // namespace invcurve
