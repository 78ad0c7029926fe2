#include "invcurve/algebra/ratfunc.hpp"

#include "invcurve/error.hpp"

namespace invcurve {

RatFunc::RatFunc(std::vector<std::string> vars)
    : num_(vars), den_(MultiPoly::constant(vars, Scalar(1))) {}

RatFunc::RatFunc(const MultiPoly& p)
    : num_(p), den_(MultiPoly::constant(p.variables(), Scalar(1))) {}

RatFunc::RatFunc(const MultiPoly& num, const MultiPoly& den) {
  if (den.is_zero()) throw Error(ErrorKind::DivisionByZero, "rational function with zero denominator");
  auto vars = union_variables(num.variables(), den.variables());
  num_ = num.over(vars);
  den_ = den.over(vars);
  if (num_.is_zero()) {
    den_ = MultiPoly::constant(vars, Scalar(1));
    return;
  }
  if (!den_.is_constant()) {
    MultiPoly g = multivariate_gcd(num_, den_);
    if (!g.is_constant()) {
      num_ = *exact_divides(g, num_);
      den_ = *exact_divides(g, den_);
    }
  }
  Scalar lc = den_.leading_coefficient();
  if (!lc.is_one()) {
    Scalar inv = lc.inverse();
    num_ = num_.scaled(inv);
    den_ = den_.scaled(inv);
  }
}

RatFunc RatFunc::constant(std::vector<std::string> vars, const Scalar& c) {
  return RatFunc(MultiPoly::constant(std::move(vars), c));
}

MultiPoly RatFunc::as_polynomial() const {
  if (!is_polynomial()) throw Error(ErrorKind::NotPolynomialField, to_string() + " is not a polynomial");
  return num_;
}

RatFunc RatFunc::over(const std::vector<std::string>& vars) const {
  RatFunc r;
  r.num_ = num_.over(vars);
  r.den_ = den_.over(vars);
  return r;
}

RatFunc RatFunc::operator-() const {
  RatFunc r = *this;
  r.num_ = -r.num_;
  return r;
}

RatFunc RatFunc::operator+(const RatFunc& o) const {
  if (o.is_zero()) return *this;
  if (is_zero()) return o;
  if (den_ == o.den_) return RatFunc(num_ + o.num_, den_);
  if (den_.is_constant() && o.den_.is_constant()) {
    RatFunc r;
    r.num_ = num_ + o.num_;
    r.den_ = den_.over(r.num_.variables());
    return r;
  }
  MultiPoly g = multivariate_gcd(den_, o.den_);
  if (g.is_constant()) return reduced(num_ * o.den_ + o.num_ * den_, den_ * o.den_);
  MultiPoly d1 = *exact_divides(g, den_);
  MultiPoly d2 = *exact_divides(g, o.den_);
  MultiPoly num = num_ * d2 + o.num_ * d1;
  if (num.is_zero()) return RatFunc(num.over(union_variables(num.variables(), g.variables())));
  MultiPoly h = multivariate_gcd(num, g);
  if (h.is_constant()) return reduced(num, den_ * d2);
  return reduced(*exact_divides(h, num), *exact_divides(h, den_ * d2));
}

RatFunc RatFunc::reduced(const MultiPoly& num, const MultiPoly& den) {
  RatFunc r;
  auto vars = union_variables(num.variables(), den.variables());
  r.num_ = num.over(vars);
  r.den_ = den.over(vars);
  if (r.num_.is_zero()) {
    r.den_ = MultiPoly::constant(vars, Scalar(1));
    return r;
  }
  Scalar lc = r.den_.leading_coefficient();
  if (!lc.is_one()) {
    Scalar inv = lc.inverse();
    r.num_ = r.num_.scaled(inv);
    r.den_ = r.den_.scaled(inv);
  }
  return r;
}

RatFunc RatFunc::operator-(const RatFunc& o) const { return *this + (-o); }

RatFunc RatFunc::operator*(const RatFunc& o) const {
  if (den_.is_constant() && o.den_.is_constant()) {
    RatFunc r;
    r.num_ = num_ * o.num_;
    r.den_ = MultiPoly::constant(r.num_.variables(), Scalar(1));
    return r;
  }
  if (is_zero() || o.is_zero()) return RatFunc(num_ * o.num_);
  MultiPoly g1 = multivariate_gcd(num_, o.den_);
  MultiPoly g2 = multivariate_gcd(o.num_, den_);
  MultiPoly a = g1.is_constant() ? num_ : *exact_divides(g1, num_);
  MultiPoly d = g1.is_constant() ? o.den_ : *exact_divides(g1, o.den_);
  MultiPoly c = g2.is_constant() ? o.num_ : *exact_divides(g2, o.num_);
  MultiPoly b = g2.is_constant() ? den_ : *exact_divides(g2, den_);
  return reduced(a * c, b * d);
}

RatFunc RatFunc::operator/(const RatFunc& o) const {
  if (o.is_zero()) throw Error(ErrorKind::DivisionByZero, "division by zero rational function");
  return *this * reduced(o.den_, o.num_);
}

RatFunc RatFunc::scaled(const Scalar& c) const {
  RatFunc r = *this;
  r.num_ = num_.scaled(c);
  if (r.num_.is_zero()) r.den_ = MultiPoly::constant(num_.variables(), Scalar(1));
  return r;
}

RatFunc RatFunc::pow(int e) const {
  if (e < 0) return RatFunc(den_, num_).pow(-e);
  RatFunc r;
  r.num_ = num_.pow(static_cast<unsigned>(e));
  r.den_ = den_.pow(static_cast<unsigned>(e));
  return r;
}

RatFunc RatFunc::derivative(const std::string& var) const {
  if (den_.is_constant()) {
    RatFunc r;
    r.num_ = num_.derivative(var);
    r.den_ = den_;
    if (r.num_.is_zero()) r.den_ = MultiPoly::constant(num_.variables(), Scalar(1));
    return r;
  }
  return RatFunc(num_.derivative(var) * den_ - num_ * den_.derivative(var), den_ * den_);
}

RatFunc RatFunc::substitute(const std::map<std::string, RatFunc>& values) const {
  // substitute into num and den by expanding each monomial as a rational function
  auto apply = [&](const MultiPoly& p) {
    std::vector<std::string> vars;
    for (const auto& v : p.variables()) {
      if (values.count(v) == 0) vars.push_back(v);
    }
    for (const auto& [name, val] : values) vars = union_variables(vars, val.variables());
    RatFunc sum(vars);
    for (const auto& [e, c] : p.terms()) {
      RatFunc t = RatFunc::constant(vars, c);
      Exponents kept(vars.size(), 0);
      for (std::size_t i = 0; i < e.size(); ++i) {
        if (e[i] == 0) continue;
        auto it = values.find(p.variables()[i]);
        if (it == values.end()) {
          kept[std::find(vars.begin(), vars.end(), p.variables()[i]) - vars.begin()] = e[i];
        } else {
          t = t * it->second.pow(static_cast<int>(e[i]));
        }
      }
      sum += t * RatFunc(MultiPoly::monomial(vars, kept, Scalar(1)));
    }
    return sum;
  };
  return apply(num_) / apply(den_);
}

Scalar RatFunc::evaluate(const std::map<std::string, Scalar>& point) const {
  Scalar d = den_.evaluate(point);
  if (d.is_zero()) throw Error(ErrorKind::DivisionByZero, "denominator vanishes at the point");
  return num_.evaluate(point) / d;
}

RatFunc RatFunc::substitute_parameters(const std::map<Symbol, Scalar>& values) const {
  return RatFunc(num_.substitute_parameters(values), den_.substitute_parameters(values));
}

std::string RatFunc::to_string() const {
  if (den_.is_constant()) return num_.to_string();
  std::string n = num_.to_string();
  if (num_.size() > 1 || !num_.leading_coefficient().is_polynomial()) n = "(" + n + ")";
  return n + "/(" + den_.to_string() + ")";
}

bool operator==(const RatFunc& a, const RatFunc& b) {
  return a.num_ == b.num_ && a.den_ == b.den_;
}

}  // namespace invcurve
