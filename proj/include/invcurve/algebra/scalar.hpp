#pragma once

#include <gmpxx.h>

#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "invcurve/algebra/poly.hpp"

namespace invcurve {

// Element of Q(p1,...,pk). Canonical: gcd(num, den) = 1, den monic.
class Scalar {
 public:
  Scalar() : den_(Poly::constant(1)) {}
  Scalar(long v) : num_(Poly::constant(v)), den_(Poly::constant(1)) {}  // NOLINT
  Scalar(const mpq_class& v) : num_(Poly::constant(v)), den_(Poly::constant(1)) {}  // NOLINT
  explicit Scalar(const Poly& p) : num_(p), den_(Poly::constant(1)) {}
  static Scalar fraction(const Poly& num, const Poly& den);
  static Scalar symbol(std::string_view name);
  static Scalar rational(long num, long den);

  const Poly& numerator() const { return num_; }
  const Poly& denominator() const { return den_; }

  bool is_zero() const { return num_.is_zero(); }
  bool is_one() const { return num_.is_one() && den_.is_one(); }
  bool is_rational() const { return num_.is_constant() && den_.is_constant(); }
  bool is_polynomial() const { return den_.is_one(); }
  mpq_class to_rational() const;
  double to_double() const;
  double evaluate(const std::map<std::string, double>& values) const;
  std::vector<Symbol> symbols() const;
  bool contains(Symbol s) const { return num_.contains(s) || den_.contains(s); }

  Scalar operator-() const;
  Scalar operator+(const Scalar& o) const;
  Scalar operator-(const Scalar& o) const;
  Scalar operator*(const Scalar& o) const;
  Scalar operator/(const Scalar& o) const;
  Scalar& operator+=(const Scalar& o) { return *this = *this + o; }
  Scalar& operator-=(const Scalar& o) { return *this = *this - o; }
  Scalar& operator*=(const Scalar& o) { return *this = *this * o; }
  Scalar& operator/=(const Scalar& o) { return *this = *this / o; }
  Scalar inverse() const;
  Scalar pow(int e) const;

  Scalar derivative(Symbol s) const;
  Scalar substitute(Symbol s, const Scalar& value) const;
  Scalar substitute(const std::map<Symbol, Scalar>& values) const;

  // the sign of the leading rational coefficient of the numerator
  int sign_hint() const;

  std::string to_string() const;

  friend bool operator==(const Scalar& a, const Scalar& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }
  friend bool operator!=(const Scalar& a, const Scalar& b) { return !(a == b); }

 private:
  Poly num_;
  Poly den_;
};

std::optional<Scalar> sqrt_exact(const Scalar& s);

}  // namespace invcurve
