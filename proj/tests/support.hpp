#pragma once

#include <functional>
#include <random>
#include <string>
#include <vector>

#include "invcurve/algebra/ratfunc.hpp"
#include "invcurve/cli/dsl.hpp"
#include "invcurve/forms/forms.hpp"
#include "invcurve/vectorfield/vectorfield.hpp"

namespace testing_support {

using namespace invcurve;

inline MultiPoly P(const std::string& text, const std::vector<std::string>& vars = {"X", "Y"}) {
  return dsl::parse_polynomial(text, vars);
}

inline RatFunc R(const std::string& text, const std::vector<std::string>& vars = {"X", "Y"}) {
  return dsl::parse_ratfunc(text, vars);
}

inline Scalar S(const std::string& text) { return dsl::parse_scalar(text); }

inline VectorField field(const std::string& xdot, const std::string& ydot,
                         std::vector<DiffParam> diff_params = {}) {
  return VectorField({"X", "Y"}, {R(xdot), R(ydot)}, std::move(diff_params));
}

inline VectorField lv(const std::string& a, const std::string& b, const std::string& c,
                      const std::string& d) {
  return field("X*((" + a + ")*Y + (" + b + "))", "Y*((" + c + ")*X + (" + d + "))");
}

inline VectorField lv2d(const std::string& a, const std::string& b, const std::string& c,
                        const std::string& d) {
  return field("X*((" + a + ")*Y + (" + b + "))", "Y*((" + c + ")*X + (" + d + ")*Y)");
}

class Random {
 public:
  explicit Random(unsigned seed) : gen_(seed) {}

  int integer(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(gen_); }
  bool coin() { return integer(0, 1) == 1; }

  mpq_class small_rational() {
    mpq_class q(integer(-5, 5), integer(1, 3));
    q.canonicalize();
    return q;
  }

  Poly param_poly(const std::vector<std::string>& params, unsigned degree) {
    std::vector<Poly::Term> terms;
    int n = integer(1, 3);
    for (int k = 0; k < n; ++k) {
      std::vector<Monomial::Power> powers;
      for (const auto& p : params) powers.emplace_back(Symbol(p), integer(0, static_cast<int>(degree)));
      terms.emplace_back(Monomial::from_powers(powers), small_rational());
    }
    return Poly::from_terms(std::move(terms));
  }

  Scalar scalar(const std::vector<std::string>& params = {"a", "b"}) {
    Poly num = param_poly(params, 1);
    Poly den = param_poly(params, 1);
    if (den.is_zero() || coin()) den = Poly::constant(integer(1, 4));
    return Scalar::fraction(num, den);
  }

  Scalar nonzero_scalar(const std::vector<std::string>& params = {"a", "b"}) {
    Scalar s = scalar(params);
    while (s.is_zero()) s = scalar(params);
    return s;
  }

  MultiPoly poly(const std::vector<std::string>& vars, unsigned degree, int terms = 4,
                 bool symbolic = true) {
    MultiPoly p(vars);
    for (int k = 0; k < terms; ++k) {
      Exponents e(vars.size(), 0);
      unsigned budget = static_cast<unsigned>(integer(0, static_cast<int>(degree)));
      for (unsigned u = 0; u < budget; ++u) e[integer(0, static_cast<int>(vars.size()) - 1)] += 1;
      Scalar c = symbolic && integer(0, 3) == 0 ? scalar({"a"}) : Scalar(small_rational());
      p.add_term(e, c);
    }
    return p;
  }

  MultiPoly nonzero_poly(const std::vector<std::string>& vars, unsigned degree, int terms = 4,
                         bool symbolic = true) {
    MultiPoly p = poly(vars, degree, terms, symbolic);
    while (p.is_zero()) p = poly(vars, degree, terms, symbolic);
    return p;
  }

  std::mt19937& engine() { return gen_; }

 private:
  std::mt19937 gen_;
};

inline DForm random_form(Random& rng, unsigned arity, const std::vector<std::string>& vars, bool symbolic = true) {
  DForm out(vars, arity);
  std::vector<DForm::Index> indices;
  DForm::Index current;
  std::function<void(unsigned)> rec = [&](unsigned start) {
    if (current.size() == arity) {
      indices.push_back(current);
      return;
    }
    for (unsigned i = start; i < vars.size(); ++i) {
      current.push_back(i);
      rec(i + 1);
      current.pop_back();
    }
  };
  rec(0);
  for (const auto& index : indices) {
    if (!rng.coin()) continue;
    RatFunc f(rng.poly(vars, 2, 3, symbolic));
    if (rng.integer(0, 3) == 0) {
      MultiPoly den = rng.nonzero_poly(vars, 1, 2, false);
      f = f / RatFunc(den);
    }
    out = out + DForm::term(vars, f, index);
  }
  return out;
}

}  // namespace testing_support
