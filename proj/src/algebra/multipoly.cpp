#include "invcurve/algebra/multipoly.hpp"

#include <algorithm>
#include <numeric>

#include "invcurve/error.hpp"

namespace invcurve {

bool GrlexGreater::operator()(const Exponents& a, const Exponents& b) const {
  unsigned da = std::accumulate(a.begin(), a.end(), 0u);
  unsigned db = std::accumulate(b.begin(), b.end(), 0u);
  if (da != db) return da > db;
  return std::lexicographical_compare(b.begin(), b.end(), a.begin(), a.end());
}

std::vector<std::string> union_variables(const std::vector<std::string>& a,
                                         const std::vector<std::string>& b) {
  std::vector<std::string> out = a;
  for (const auto& v : b) {
    if (std::find(out.begin(), out.end(), v) == out.end()) out.push_back(v);
  }
  return out;
}

MultiPoly::MultiPoly(std::vector<std::string> vars) : vars_(std::move(vars)) {}

MultiPoly MultiPoly::constant(std::vector<std::string> vars, const Scalar& c) {
  MultiPoly p(std::move(vars));
  p.add_term(Exponents(p.vars_.size(), 0), c);
  return p;
}

MultiPoly MultiPoly::variable(std::vector<std::string> vars, const std::string& name) {
  MultiPoly p(std::move(vars));
  int i = p.index_of(name);
  if (i < 0) throw Error(ErrorKind::UnknownVariable, "unknown variable " + name);
  Exponents e(p.vars_.size(), 0);
  e[i] = 1;
  p.add_term(e, Scalar(1));
  return p;
}

MultiPoly MultiPoly::monomial(std::vector<std::string> vars, const Exponents& e, const Scalar& c) {
  MultiPoly p(std::move(vars));
  p.add_term(e, c);
  return p;
}

int MultiPoly::index_of(const std::string& var) const {
  auto it = std::find(vars_.begin(), vars_.end(), var);
  return it == vars_.end() ? -1 : static_cast<int>(it - vars_.begin());
}

bool MultiPoly::is_constant() const {
  if (terms_.empty()) return true;
  if (terms_.size() > 1) return false;
  const auto& e = terms_.begin()->first;
  return std::all_of(e.begin(), e.end(), [](unsigned x) { return x == 0; });
}

Scalar MultiPoly::constant_value() const {
  if (terms_.empty()) return Scalar();
  if (!is_constant()) throw Error(ErrorKind::InvalidArgument, "polynomial is not constant");
  return terms_.begin()->second;
}

Scalar MultiPoly::coefficient(const Exponents& e) const {
  auto it = terms_.find(e);
  return it == terms_.end() ? Scalar() : it->second;
}

unsigned MultiPoly::total_degree() const {
  if (terms_.empty()) return 0;
  const auto& e = terms_.begin()->first;
  return std::accumulate(e.begin(), e.end(), 0u);
}

unsigned MultiPoly::degree_in(const std::string& var) const {
  int i = index_of(var);
  if (i < 0) return 0;
  unsigned d = 0;
  for (const auto& [e, c] : terms_) d = std::max(d, e[i]);
  return d;
}

std::vector<std::string> MultiPoly::used_variables() const {
  std::vector<std::string> out;
  for (std::size_t i = 0; i < vars_.size(); ++i) {
    for (const auto& [e, c] : terms_) {
      if (e[i] > 0) {
        out.push_back(vars_[i]);
        break;
      }
    }
  }
  return out;
}

bool MultiPoly::is_homogeneous() const {
  if (terms_.empty()) return true;
  unsigned d = total_degree();
  for (const auto& [e, c] : terms_) {
    if (std::accumulate(e.begin(), e.end(), 0u) != d) return false;
  }
  return true;
}

MultiPoly MultiPoly::homogeneous_part(unsigned degree) const {
  MultiPoly r(vars_);
  for (const auto& [e, c] : terms_) {
    if (std::accumulate(e.begin(), e.end(), 0u) == degree) r.terms_.emplace(e, c);
  }
  return r;
}

MultiPoly MultiPoly::over(const std::vector<std::string>& vars) const {
  if (vars == vars_) return *this;
  std::vector<int> target(vars_.size(), -1);
  for (std::size_t i = 0; i < vars_.size(); ++i) {
    auto it = std::find(vars.begin(), vars.end(), vars_[i]);
    if (it != vars.end()) target[i] = static_cast<int>(it - vars.begin());
  }
  MultiPoly r(vars);
  for (const auto& [e, c] : terms_) {
    Exponents ne(vars.size(), 0);
    for (std::size_t i = 0; i < e.size(); ++i) {
      if (e[i] == 0) continue;
      if (target[i] < 0) throw Error(ErrorKind::UnknownVariable, "unknown variable " + vars_[i]);
      ne[target[i]] = e[i];
    }
    r.terms_.emplace(std::move(ne), c);
  }
  return r;
}

void MultiPoly::add_term(const Exponents& e, const Scalar& c) {
  if (e.size() != vars_.size()) throw Error(ErrorKind::InvalidArgument, "exponent length mismatch");
  if (c.is_zero()) return;
  auto it = terms_.find(e);
  if (it == terms_.end()) {
    terms_.emplace(e, c);
    return;
  }
  it->second += c;
  if (it->second.is_zero()) terms_.erase(it);
}

MultiPoly MultiPoly::operator-() const {
  MultiPoly r = *this;
  for (auto& [e, c] : r.terms_) c = -c;
  return r;
}

MultiPoly MultiPoly::operator+(const MultiPoly& o) const {
  if (vars_ != o.vars_) {
    auto vars = union_variables(vars_, o.vars_);
    return over(vars) + o.over(vars);
  }
  MultiPoly r = *this;
  for (const auto& [e, c] : o.terms_) r.add_term(e, c);
  return r;
}

MultiPoly MultiPoly::operator-(const MultiPoly& o) const { return *this + (-o); }

MultiPoly MultiPoly::operator*(const MultiPoly& o) const {
  if (vars_ != o.vars_) {
    auto vars = union_variables(vars_, o.vars_);
    return over(vars) * o.over(vars);
  }
  MultiPoly r(vars_);
  Exponents e(vars_.size());
  for (const auto& [ea, ca] : terms_) {
    for (const auto& [eb, cb] : o.terms_) {
      for (std::size_t i = 0; i < e.size(); ++i) e[i] = ea[i] + eb[i];
      r.add_term(e, ca * cb);
    }
  }
  return r;
}

MultiPoly MultiPoly::scaled(const Scalar& c) const {
  if (c.is_zero()) return MultiPoly(vars_);
  MultiPoly r(vars_);
  for (const auto& [e, v] : terms_) r.terms_.emplace(e, v * c);
  return r;
}

MultiPoly MultiPoly::pow(unsigned e) const {
  MultiPoly result = constant(vars_, Scalar(1));
  MultiPoly base = *this;
  while (e > 0) {
    if (e & 1u) result = result * base;
    e >>= 1u;
    if (e > 0) base = base * base;
  }
  return result;
}

MultiPoly MultiPoly::derivative(const std::string& var) const {
  int i = index_of(var);
  MultiPoly r(vars_);
  if (i < 0) return r;
  for (const auto& [e, c] : terms_) {
    if (e[i] == 0) continue;
    Exponents ne = e;
    ne[i] -= 1;
    r.add_term(ne, c * Scalar(static_cast<long>(e[i])));
  }
  return r;
}

std::vector<MultiPoly> MultiPoly::coefficients_in(const std::string& var) const {
  int i = index_of(var);
  if (i < 0) return {*this};
  std::vector<MultiPoly> out(degree_in(var) + 1, MultiPoly(vars_));
  for (const auto& [e, c] : terms_) {
    Exponents ne = e;
    ne[i] = 0;
    out[e[i]].terms_.emplace(std::move(ne), c);
  }
  return out;
}

MultiPoly MultiPoly::substitute(const std::string& var, const MultiPoly& value) const {
  return substitute(std::map<std::string, MultiPoly>{{var, value}});
}

MultiPoly MultiPoly::substitute(const std::map<std::string, MultiPoly>& values) const {
  std::vector<std::string> vars;
  for (const auto& v : vars_) {
    if (values.count(v) == 0) vars.push_back(v);
  }
  for (const auto& [name, val] : values) vars = union_variables(vars, val.variables());
  std::vector<const MultiPoly*> images(vars_.size(), nullptr);
  for (std::size_t i = 0; i < vars_.size(); ++i) {
    auto it = values.find(vars_[i]);
    if (it != values.end()) images[i] = &it->second;
  }
  std::map<std::pair<std::size_t, unsigned>, MultiPoly> cache;
  MultiPoly result(vars);
  for (const auto& [e, c] : terms_) {
    Exponents kept(vars.size(), 0);
    MultiPoly factor = constant(vars, c);
    for (std::size_t i = 0; i < e.size(); ++i) {
      if (e[i] == 0) continue;
      if (images[i] == nullptr) {
        auto it = std::find(vars.begin(), vars.end(), vars_[i]);
        kept[it - vars.begin()] = e[i];
        continue;
      }
      auto key = std::make_pair(i, e[i]);
      auto ci = cache.find(key);
      if (ci == cache.end()) ci = cache.emplace(key, images[i]->over(vars).pow(e[i])).first;
      factor = factor * ci->second;
    }
    result += factor * monomial(vars, kept, Scalar(1));
  }
  return result;
}

Scalar MultiPoly::evaluate(const std::map<std::string, Scalar>& point) const {
  std::vector<const Scalar*> vals(vars_.size(), nullptr);
  for (std::size_t i = 0; i < vars_.size(); ++i) {
    auto it = point.find(vars_[i]);
    if (it != point.end()) vals[i] = &it->second;
  }
  Scalar sum;
  for (const auto& [e, c] : terms_) {
    Scalar t = c;
    for (std::size_t i = 0; i < e.size(); ++i) {
      if (e[i] == 0) continue;
      if (vals[i] == nullptr) throw Error(ErrorKind::UnknownVariable, "no value for " + vars_[i]);
      t *= vals[i]->pow(static_cast<int>(e[i]));
    }
    sum += t;
  }
  return sum;
}

MultiPoly MultiPoly::substitute_parameters(const std::map<Symbol, Scalar>& values) const {
  return map_coefficients([&](const Scalar& c) { return c.substitute(values); });
}

MultiPoly MultiPoly::monic() const {
  if (terms_.empty()) return *this;
  Scalar lc = leading_coefficient();
  if (lc.is_one()) return *this;
  return scaled(lc.inverse());
}

MultiPoly MultiPoly::primitive() const {
  if (terms_.empty()) return *this;
  Poly l = Poly::constant(1);
  for (const auto& [e, c] : terms_) l = lcm(l, c.denominator());
  std::vector<Poly> nums;
  for (const auto& [e, c] : terms_) nums.push_back(c.numerator() * *divide_exact(l, c.denominator()));
  Poly g;
  for (const auto& n : nums) {
    g = gcd(g, n);
    if (g.is_one()) break;
  }
  mpz_class den_lcm = 1;
  mpz_class num_gcd = 0;
  for (auto& n : nums) {
    n = *divide_exact(n, g);
    for (const auto& [m, q] : n.terms()) {
      mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), q.get_den_mpz_t());
    }
  }
  for (auto& n : nums) {
    n = n.scaled(mpq_class(den_lcm));
    for (const auto& [m, q] : n.terms()) {
      mpz_gcd(num_gcd.get_mpz_t(), num_gcd.get_mpz_t(), q.get_num_mpz_t());
    }
  }
  mpq_class f(1, num_gcd);
  f.canonicalize();
  if (nums.front().leading_coefficient() < 0) f = -f;
  MultiPoly r(vars_);
  std::size_t k = 0;
  for (const auto& [e, c] : terms_) r.terms_.emplace(e, Scalar(nums[k++].scaled(f)));
  return r;
}

namespace {

std::string monomial_string(const std::vector<std::string>& vars, const Exponents& e) {
  std::string out;
  for (std::size_t i = 0; i < e.size(); ++i) {
    if (e[i] == 0) continue;
    if (!out.empty()) out += "*";
    out += vars[i];
    if (e[i] > 1) out += "^" + std::to_string(e[i]);
  }
  return out;
}

}  // namespace

std::string MultiPoly::to_string() const {
  if (terms_.empty()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [e, c] : terms_) {
    std::string mono = monomial_string(vars_, e);
    bool negative = false;
    std::string coef;
    if (c.numerator().size() == 1) {
      negative = c.numerator().leading_coefficient() < 0;
      Scalar a = negative ? -c : c;
      coef = a.to_string();
    } else {
      coef = "(" + c.to_string() + ")";
    }
    if (first) {
      if (negative) out += "-";
    } else {
      out += negative ? " - " : " + ";
    }
    first = false;
    if (mono.empty()) {
      out += coef;
    } else if (coef == "1") {
      out += mono;
    } else {
      out += coef + "*" + mono;
    }
  }
  return out;
}

bool operator==(const MultiPoly& a, const MultiPoly& b) {
  if (a.vars_ == b.vars_) return a.terms_ == b.terms_;
  auto vars = union_variables(a.vars_, b.vars_);
  return a.over(vars).terms_ == b.over(vars).terms_;
}

std::optional<MultiPoly> exact_divides(const MultiPoly& p, const MultiPoly& q) {
  if (p.is_zero()) throw Error(ErrorKind::ZeroPolynomial, "division by the zero polynomial");
  auto vars = union_variables(p.variables(), q.variables());
  MultiPoly a = p.over(vars);
  MultiPoly r = q.over(vars);
  MultiPoly quotient(vars);
  if (r.is_zero()) return quotient;
  const auto& [ep, cp] = a.leading_term();
  Scalar inv = cp.inverse();
  while (!r.is_zero()) {
    const auto& [er, cr] = r.leading_term();
    Exponents e(vars.size());
    for (std::size_t i = 0; i < vars.size(); ++i) {
      if (er[i] < ep[i]) return std::nullopt;
      e[i] = er[i] - ep[i];
    }
    MultiPoly t = MultiPoly::monomial(vars, e, cr * inv);
    quotient += t;
    r -= t * a;
  }
  return quotient;
}

std::pair<MultiPoly, MultiPoly> poly_divrem(const MultiPoly& num, const MultiPoly& den,
                                            const std::string& by_variable) {
  if (den.is_zero()) throw Error(ErrorKind::ZeroDivisor, "division by the zero polynomial");
  auto vars = union_variables(union_variables(num.variables(), den.variables()), {by_variable});
  MultiPoly a = num.over(vars);
  MultiPoly b = den.over(vars);
  unsigned d = b.degree_in(by_variable);
  MultiPoly lc_poly = b.coefficients_in(by_variable)[d];
  if (!lc_poly.is_constant()) {
    throw Error(ErrorKind::ZeroDivisor,
                "leading coefficient " + lc_poly.to_string() + " is not invertible");
  }
  Scalar inv = lc_poly.constant_value().inverse();
  int vi = a.index_of(by_variable);
  MultiPoly q(vars);
  MultiPoly r = a;
  while (!r.is_zero()) {
    unsigned k = r.degree_in(by_variable);
    if (k < d) break;
    MultiPoly c = r.coefficients_in(by_variable)[k];
    Exponents shift(vars.size(), 0);
    shift[vi] = k - d;
    MultiPoly t = c.scaled(inv) * MultiPoly::monomial(vars, shift, Scalar(1));
    q += t;
    r -= t * b;
  }
  return {q, r};
}

Symbol variable_symbol(const std::string& var) { return Symbol("@" + var); }

Poly to_poly(const MultiPoly& p) {
  Poly l = Poly::constant(1);
  for (const auto& [e, c] : p.terms()) {
    if (!c.denominator().is_one()) l = lcm(l, c.denominator());
  }
  std::vector<Symbol> syms;
  for (const auto& v : p.variables()) syms.push_back(variable_symbol(v));
  std::vector<Poly::Term> terms;
  for (const auto& [e, c] : p.terms()) {
    std::vector<Monomial::Power> powers;
    for (std::size_t i = 0; i < e.size(); ++i) {
      if (e[i] > 0) powers.emplace_back(syms[i], e[i]);
    }
    Monomial m = Monomial::from_powers(std::move(powers));
    Poly coef = c.numerator();
    if (!c.denominator().is_one() || !l.is_one()) coef = coef * *divide_exact(l, c.denominator());
    for (const auto& [cm, q] : coef.terms()) terms.emplace_back(cm * m, q);
  }
  return Poly::from_terms(std::move(terms));
}

MultiPoly from_poly(const Poly& p, const std::vector<std::string>& vars) {
  std::vector<Symbol> syms;
  for (const auto& v : vars) syms.push_back(variable_symbol(v));
  std::map<Exponents, std::vector<Poly::Term>> grouped;
  for (const auto& [m, q] : p.terms()) {
    Exponents e(vars.size(), 0);
    std::vector<Monomial::Power> rest;
    for (const auto& [s, k] : m.powers()) {
      auto it = std::find(syms.begin(), syms.end(), s);
      if (it != syms.end()) {
        e[it - syms.begin()] = k;
      } else if (!s.name().empty() && s.name()[0] == '@') {
        throw Error(ErrorKind::UnknownVariable, "unknown variable " + s.name().substr(1));
      } else {
        rest.emplace_back(s, k);
      }
    }
    grouped[e].emplace_back(Monomial::from_powers(std::move(rest)), q);
  }
  MultiPoly r(vars);
  for (auto& [e, ts] : grouped) r.add_term(e, Scalar(Poly::from_terms(std::move(ts))));
  return r;
}

MultiPoly multivariate_gcd(const MultiPoly& p, const MultiPoly& q) {
  auto vars = union_variables(p.variables(), q.variables());
  if (p.is_zero()) return q.over(vars).monic();
  if (q.is_zero()) return p.over(vars).monic();
  if (p.is_constant() || q.is_constant()) return MultiPoly::constant(vars, Scalar(1));
  Poly g = gcd(to_poly(p), to_poly(q));
  return from_poly(g, vars).monic();
}

MultiPoly resultant(const MultiPoly& p, const MultiPoly& q, const std::string& var) {
  auto vars = union_variables(p.variables(), q.variables());
  Poly r = resultant(to_poly(p), to_poly(q), variable_symbol(var));
  return from_poly(r, vars);
}

std::optional<MultiPoly> sqrt_exact(const MultiPoly& p) {
  const auto& vars = p.variables();
  if (p.is_zero()) return p;
  const auto& [e0, c0] = p.leading_term();
  auto rc = sqrt_exact(c0);
  if (!rc) return std::nullopt;
  Exponents half(e0.size());
  for (std::size_t i = 0; i < e0.size(); ++i) {
    if (e0[i] % 2 != 0) return std::nullopt;
    half[i] = e0[i] / 2;
  }
  MultiPoly s = MultiPoly::monomial(vars, half, *rc);
  Scalar twice = *rc * Scalar(2);
  Exponents last = half;
  MultiPoly r = p - s * s;
  GrlexGreater greater;
  while (!r.is_zero()) {
    const auto& [er, cr] = r.leading_term();
    Exponents q(er.size());
    for (std::size_t i = 0; i < er.size(); ++i) {
      if (er[i] < half[i]) return std::nullopt;
      q[i] = er[i] - half[i];
    }
    if (!greater(last, q)) return std::nullopt;
    MultiPoly t = MultiPoly::monomial(vars, q, cr / twice);
    r = r - t * (s + s + t);
    s = s + t;
    last = q;
  }
  return s;
}

bool are_associates(const MultiPoly& p, const MultiPoly& q) {
  if (p.is_zero() || q.is_zero()) return p.is_zero() && q.is_zero();
  auto vars = union_variables(p.variables(), q.variables());
  MultiPoly a = p.over(vars);
  MultiPoly b = q.over(vars);
  return a.scaled(b.leading_coefficient()) == b.scaled(a.leading_coefficient());
}

}  // namespace invcurve
