#pragma once

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "invcurve/algebra/scalar.hpp"

namespace invcurve {

using Exponents = std::vector<unsigned>;

// graded lexicographic on dense exponent vectors, first variable largest
struct GrlexGreater {
  bool operator()(const Exponents& a, const Exponents& b) const;
};

// Polynomial in named geometric variables with coefficients in Q(params).
class MultiPoly {
 public:
  using TermMap = std::map<Exponents, Scalar, GrlexGreater>;

  MultiPoly() = default;
  explicit MultiPoly(std::vector<std::string> vars);
  static MultiPoly constant(std::vector<std::string> vars, const Scalar& c);
  static MultiPoly variable(std::vector<std::string> vars, const std::string& name);
  static MultiPoly monomial(std::vector<std::string> vars, const Exponents& e, const Scalar& c);

  const std::vector<std::string>& variables() const { return vars_; }
  const TermMap& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }
  int index_of(const std::string& var) const;

  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  Scalar constant_value() const;
  Scalar coefficient(const Exponents& e) const;
  const std::pair<const Exponents, Scalar>& leading_term() const { return *terms_.begin(); }
  const Scalar& leading_coefficient() const { return terms_.begin()->second; }
  unsigned total_degree() const;
  unsigned degree_in(const std::string& var) const;
  // variables that actually occur
  std::vector<std::string> used_variables() const;
  bool is_homogeneous() const;
  MultiPoly homogeneous_part(unsigned degree) const;

  // same polynomial over a different variable list; every used variable must be present
  MultiPoly over(const std::vector<std::string>& vars) const;

  void add_term(const Exponents& e, const Scalar& c);

  MultiPoly operator-() const;
  MultiPoly operator+(const MultiPoly& o) const;
  MultiPoly operator-(const MultiPoly& o) const;
  MultiPoly operator*(const MultiPoly& o) const;
  MultiPoly& operator+=(const MultiPoly& o) { return *this = *this + o; }
  MultiPoly& operator-=(const MultiPoly& o) { return *this = *this - o; }
  MultiPoly& operator*=(const MultiPoly& o) { return *this = *this * o; }
  MultiPoly scaled(const Scalar& c) const;
  MultiPoly pow(unsigned e) const;

  MultiPoly derivative(const std::string& var) const;
  // coefficient polynomials in var (index = power), over the same variable list
  std::vector<MultiPoly> coefficients_in(const std::string& var) const;
  MultiPoly substitute(const std::string& var, const MultiPoly& value) const;
  MultiPoly substitute(const std::map<std::string, MultiPoly>& values) const;
  Scalar evaluate(const std::map<std::string, Scalar>& point) const;
  MultiPoly substitute_parameters(const std::map<Symbol, Scalar>& values) const;
  template <typename F>
  MultiPoly map_coefficients(F f) const {
    MultiPoly r(vars_);
    for (const auto& [e, c] : terms_) r.add_term(e, f(c));
    return r;
  }

  MultiPoly monic() const;
  // denominators cleared, polynomial content removed, leading numeric coefficient positive
  MultiPoly primitive() const;

  std::string to_string() const;

  friend bool operator==(const MultiPoly& a, const MultiPoly& b);
  friend bool operator!=(const MultiPoly& a, const MultiPoly& b) { return !(a == b); }

 private:
  std::vector<std::string> vars_;
  TermMap terms_;
};

std::vector<std::string> union_variables(const std::vector<std::string>& a,
                                         const std::vector<std::string>& b);

// q/p when p divides q over Q(params)[vars]
std::optional<MultiPoly> exact_divides(const MultiPoly& p, const MultiPoly& q);
std::pair<MultiPoly, MultiPoly> poly_divrem(const MultiPoly& num, const MultiPoly& den,
                                            const std::string& by_variable);
MultiPoly multivariate_gcd(const MultiPoly& p, const MultiPoly& q);
MultiPoly resultant(const MultiPoly& p, const MultiPoly& q, const std::string& var);
std::optional<MultiPoly> sqrt_exact(const MultiPoly& p);
bool are_associates(const MultiPoly& p, const MultiPoly& q);

// Conversion to polynomials over Q in parameters and variables. Variable names are
// mapped to reserved symbols so they never collide with parameters.
Symbol variable_symbol(const std::string& var);
Poly to_poly(const MultiPoly& p);
MultiPoly from_poly(const Poly& p, const std::vector<std::string>& vars);

}  // namespace invcurve
