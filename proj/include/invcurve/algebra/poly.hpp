#pragma once

#include <gmpxx.h>

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "invcurve/algebra/symbol.hpp"

namespace invcurve {

class Monomial {
 public:
  using Power = std::pair<Symbol, unsigned>;

  Monomial() = default;
  explicit Monomial(Symbol s, unsigned e = 1);
  // powers need not be sorted; zero exponents are dropped
  static Monomial from_powers(std::vector<Power> powers);

  const std::vector<Power>& powers() const { return powers_; }
  unsigned degree() const { return degree_; }
  unsigned degree_in(Symbol s) const;
  bool is_one() const { return powers_.empty(); }

  Monomial operator*(const Monomial& other) const;
  std::optional<Monomial> divide(const Monomial& other) const;
  Monomial without(Symbol s) const;
  Monomial lcm(const Monomial& other) const;
  Monomial gcd(const Monomial& other) const;

  friend bool operator==(const Monomial& a, const Monomial& b) {
    return a.degree_ == b.degree_ && a.powers_ == b.powers_;
  }
  friend bool operator!=(const Monomial& a, const Monomial& b) { return !(a == b); }

  std::string to_string() const;

 private:
  std::vector<Power> powers_;
  unsigned degree_ = 0;
};

// graded lexicographic; symbols ordered by name, earlier name is the larger variable
int compare_grlex(const Monomial& a, const Monomial& b);

struct MonomialGreater {
  bool operator()(const Monomial& a, const Monomial& b) const {
    return compare_grlex(a, b) > 0;
  }
};

// Sparse multivariate polynomial over Q in interned symbols.
class Poly {
 public:
  using Term = std::pair<Monomial, mpq_class>;

  Poly() = default;
  static Poly constant(const mpq_class& c);
  static Poly variable(Symbol s);
  static Poly monomial(const Monomial& m, const mpq_class& c);
  static Poly from_terms(std::vector<Term> terms);
  // terms already strictly decreasing with nonzero coefficients
  static Poly from_sorted_terms(std::vector<Term> terms);

  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  bool is_one() const;
  mpq_class constant_value() const;
  const std::vector<Term>& terms() const { return terms_; }
  const Term& leading_term() const { return terms_.front(); }
  const mpq_class& leading_coefficient() const { return terms_.front().second; }
  std::size_t size() const { return terms_.size(); }

  unsigned total_degree() const;
  unsigned degree_in(Symbol s) const;
  std::vector<Symbol> symbols() const;
  bool contains(Symbol s) const;

  Poly operator-() const;
  Poly operator+(const Poly& o) const;
  Poly operator-(const Poly& o) const;
  Poly operator*(const Poly& o) const;
  Poly& operator+=(const Poly& o) { return *this = *this + o; }
  Poly& operator-=(const Poly& o) { return *this = *this - o; }
  Poly& operator*=(const Poly& o) { return *this = *this * o; }
  Poly scaled(const mpq_class& c) const;
  Poly times_monomial(const Monomial& m, const mpq_class& c) const;
  Poly pow(unsigned e) const;

  Poly derivative(Symbol s) const;
  // coefficient list in s, index = power of s
  std::vector<Poly> coefficients_in(Symbol s) const;
  static Poly from_coefficients(const std::vector<Poly>& coeffs, Symbol s);
  Poly substitute(Symbol s, const Poly& value) const;
  Poly substitute(const std::map<Symbol, Poly>& values) const;
  mpq_class evaluate(const std::map<Symbol, mpq_class>& values) const;

  Poly monic() const;
  // integer coefficients with gcd 1 and positive leading coefficient
  Poly primitive_integer() const;
  mpq_class coefficient_lcm_denominator() const;

  std::string to_string() const;

  friend bool operator==(const Poly& a, const Poly& b) { return a.terms_ == b.terms_; }
  friend bool operator!=(const Poly& a, const Poly& b) { return !(a == b); }

 private:
  std::vector<Term> terms_;  // strictly decreasing under grlex, no zero coefficients
};

std::optional<Poly> divide_exact(const Poly& a, const Poly& b);
Poly pseudo_remainder(const Poly& a, const Poly& b, Symbol v);
// gcd of the coefficients of a viewed as polynomial in v
Poly content_in(const Poly& a, Symbol v);
// monic gcd; gcd(0,0) = 0
Poly gcd(const Poly& a, const Poly& b);
Poly lcm(const Poly& a, const Poly& b);
Poly resultant(const Poly& a, const Poly& b, Symbol v);
std::optional<Poly> sqrt_exact(const Poly& a);
// determinant of a square matrix of polynomials (fraction-free elimination)
Poly determinant(std::vector<std::vector<Poly>> m);

std::string rational_to_string(const mpq_class& q);

}  // namespace invcurve
