#include "invcurve/algebra/scalar.hpp"

#include <cmath>

#include "invcurve/error.hpp"

namespace invcurve {

namespace {

Scalar make_canonical(Poly num, Poly den) {
  if (den.is_zero()) throw Error(ErrorKind::DivisionByZero, "division by zero");
  if (num.is_zero()) return Scalar();
  if (!den.is_constant()) {
    Poly g = gcd(num, den);
    if (!g.is_one()) {
      num = *divide_exact(num, g);
      den = *divide_exact(den, g);
    }
  }
  mpq_class lc = den.leading_coefficient();
  if (lc != 1) {
    num = num.scaled(1 / lc);
    den = den.scaled(1 / lc);
  }
  return Scalar::fraction(num, den);
}

}  // namespace

Scalar Scalar::fraction(const Poly& num, const Poly& den) {
  if (den.is_zero()) throw Error(ErrorKind::DivisionByZero, "division by zero");
  bool canonical = den.leading_coefficient() == 1 && (den.is_one() || gcd(num, den).is_one());
  if (!canonical) return make_canonical(num, den);
  Scalar s;
  if (num.is_zero()) return s;
  s.num_ = num;
  s.den_ = den;
  return s;
}

Scalar Scalar::symbol(std::string_view name) { return Scalar(Poly::variable(Symbol(name))); }

Scalar Scalar::rational(long num, long den) {
  if (den == 0) throw Error(ErrorKind::DivisionByZero, "division by zero");
  mpq_class q(num, den);
  q.canonicalize();
  return Scalar(q);
}

mpq_class Scalar::to_rational() const {
  if (!is_rational()) throw Error(ErrorKind::InvalidArgument, "scalar " + to_string() + " is not rational");
  return num_.constant_value() / den_.constant_value();
}

double Scalar::to_double() const { return to_rational().get_d(); }

double Scalar::evaluate(const std::map<std::string, double>& values) const {
  auto eval = [&](const Poly& p) {
    double sum = 0;
    for (const auto& [m, c] : p.terms()) {
      double v = c.get_d();
      for (const auto& [s, e] : m.powers()) {
        auto it = values.find(s.name());
        if (it == values.end()) {
          throw Error(ErrorKind::UnknownVariable, "no value for parameter " + s.name());
        }
        v *= std::pow(it->second, static_cast<double>(e));
      }
      sum += v;
    }
    return sum;
  };
  return eval(num_) / eval(den_);
}

std::vector<Symbol> Scalar::symbols() const {
  std::vector<Symbol> a = num_.symbols();
  std::vector<Symbol> b = den_.symbols();
  a.insert(a.end(), b.begin(), b.end());
  std::sort(a.begin(), a.end());
  a.erase(std::unique(a.begin(), a.end()), a.end());
  return a;
}

Scalar Scalar::operator-() const {
  Scalar r = *this;
  r.num_ = -r.num_;
  return r;
}

Scalar Scalar::operator+(const Scalar& o) const {
  if (o.is_zero()) return *this;
  if (is_zero()) return o;
  if (den_.is_one() && o.den_.is_one()) {
    Scalar r;
    r.num_ = num_ + o.num_;
    return r;
  }
  if (den_ == o.den_) return make_canonical(num_ + o.num_, den_);
  Poly g = gcd(den_, o.den_);
  Poly da = *divide_exact(den_, g);
  Poly db = *divide_exact(o.den_, g);
  return make_canonical(num_ * db + o.num_ * da, da * o.den_);
}

Scalar Scalar::operator-(const Scalar& o) const { return *this + (-o); }

Scalar Scalar::operator*(const Scalar& o) const {
  if (is_zero() || o.is_zero()) return Scalar();
  if (den_.is_one() && o.den_.is_one()) {
    Scalar r;
    r.num_ = num_ * o.num_;
    return r;
  }
  Poly g1 = gcd(num_, o.den_);
  Poly g2 = gcd(o.num_, den_);
  Poly n1 = *divide_exact(num_, g1);
  Poly d2 = *divide_exact(o.den_, g1);
  Poly n2 = *divide_exact(o.num_, g2);
  Poly d1 = *divide_exact(den_, g2);
  Poly den = d1 * d2;
  Poly num = n1 * n2;
  mpq_class lc = den.leading_coefficient();
  Scalar r;
  r.num_ = num.scaled(1 / lc);
  r.den_ = den.scaled(1 / lc);
  return r;
}

Scalar Scalar::inverse() const {
  if (is_zero()) throw Error(ErrorKind::DivisionByZero, "division by zero scalar");
  mpq_class lc = num_.leading_coefficient();
  Scalar r;
  r.num_ = den_.scaled(1 / lc);
  r.den_ = num_.scaled(1 / lc);
  return r;
}

Scalar Scalar::operator/(const Scalar& o) const { return *this * o.inverse(); }

Scalar Scalar::pow(int e) const {
  if (e < 0) return inverse().pow(-e);
  Scalar r;
  r.num_ = num_.pow(static_cast<unsigned>(e));
  r.den_ = den_.pow(static_cast<unsigned>(e));
  return r;
}

Scalar Scalar::derivative(Symbol s) const {
  if (!contains(s)) return Scalar();
  if (den_.is_one()) return Scalar(num_.derivative(s));
  return make_canonical(num_.derivative(s) * den_ - num_ * den_.derivative(s), den_ * den_);
}

Scalar Scalar::substitute(Symbol s, const Scalar& value) const {
  if (!contains(s)) return *this;
  return substitute(std::map<Symbol, Scalar>{{s, value}});
}

Scalar Scalar::substitute(const std::map<Symbol, Scalar>& values) const {
  bool touched = false;
  for (const auto& [s, v] : values) {
    if (contains(s)) touched = true;
  }
  if (!touched) return *this;
  auto eval = [&](const Poly& p) {
    Scalar sum;
    for (const auto& [m, c] : p.terms()) {
      Scalar term(c);
      std::vector<Monomial::Power> keep;
      for (const auto& [sym, e] : m.powers()) {
        auto it = values.find(sym);
        if (it == values.end()) {
          keep.emplace_back(sym, e);
        } else {
          term = term * it->second.pow(static_cast<int>(e));
        }
      }
      sum += term * Scalar(Poly::monomial(Monomial::from_powers(std::move(keep)), 1));
    }
    return sum;
  };
  return eval(num_) / eval(den_);
}

int Scalar::sign_hint() const {
  if (is_zero()) return 0;
  return num_.leading_coefficient() < 0 ? -1 : 1;
}

std::string Scalar::to_string() const {
  if (den_.is_one()) return num_.to_string();
  std::string n = num_.to_string();
  if (num_.size() > 1) n = "(" + n + ")";
  const auto& lead = den_.leading_term();
  bool bare = den_.size() == 1 && lead.first.powers().size() == 1 && lead.first.powers()[0].second == 1;
  return n + (bare ? "/" + den_.to_string() : "/(" + den_.to_string() + ")");
}

std::optional<Scalar> sqrt_exact(const Scalar& s) {
  auto n = sqrt_exact(s.numerator());
  if (!n) return std::nullopt;
  auto d = sqrt_exact(s.denominator());
  if (!d) return std::nullopt;
  return Scalar::fraction(*n, *d);
}

}  // namespace invcurve
