#pragma once

#include <map>
#include <string>
#include <vector>

#include "invcurve/algebra/multipoly.hpp"

namespace invcurve {

// Reduced quotient num/den with den monic.
class RatFunc {
 public:
  RatFunc() = default;
  explicit RatFunc(std::vector<std::string> vars);
  RatFunc(const MultiPoly& p);  // NOLINT
  RatFunc(const MultiPoly& num, const MultiPoly& den);
  static RatFunc constant(std::vector<std::string> vars, const Scalar& c);

  const MultiPoly& numerator() const { return num_; }
  const MultiPoly& denominator() const { return den_; }
  const std::vector<std::string>& variables() const { return num_.variables(); }

  bool is_zero() const { return num_.is_zero(); }
  bool is_polynomial() const { return den_.is_constant(); }
  bool is_constant() const { return num_.is_constant() && den_.is_constant(); }
  MultiPoly as_polynomial() const;
  RatFunc over(const std::vector<std::string>& vars) const;

  RatFunc operator-() const;
  RatFunc operator+(const RatFunc& o) const;
  RatFunc operator-(const RatFunc& o) const;
  RatFunc operator*(const RatFunc& o) const;
  RatFunc operator/(const RatFunc& o) const;
  RatFunc& operator+=(const RatFunc& o) { return *this = *this + o; }
  RatFunc& operator-=(const RatFunc& o) { return *this = *this - o; }
  RatFunc& operator*=(const RatFunc& o) { return *this = *this * o; }
  RatFunc scaled(const Scalar& c) const;
  RatFunc pow(int e) const;

  RatFunc derivative(const std::string& var) const;
  RatFunc substitute(const std::map<std::string, RatFunc>& values) const;
  Scalar evaluate(const std::map<std::string, Scalar>& point) const;
  RatFunc substitute_parameters(const std::map<Symbol, Scalar>& values) const;
  template <typename F>
  RatFunc map_coefficients(F f) const {
    return RatFunc(num_.map_coefficients(f), den_.map_coefficients(f));
  }

  std::string to_string() const;

  friend bool operator==(const RatFunc& a, const RatFunc& b);
  friend bool operator!=(const RatFunc& a, const RatFunc& b) { return !(a == b); }

 private:
  // num/den already coprime; only the denominator is made monic
  static RatFunc reduced(const MultiPoly& num, const MultiPoly& den);

  MultiPoly num_;
  MultiPoly den_;
};

}  // namespace invcurve
