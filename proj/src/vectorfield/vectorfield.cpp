#include "invcurve/vectorfield/vectorfield.hpp"

#include <algorithm>

#include "invcurve/algebra/planar_solve.hpp"
#include "invcurve/error.hpp"

namespace invcurve {

Scalar DiffParam::derivative() const {
  if (mode == Mode::Const) return coefficient;
  return coefficient * Scalar::symbol(name);
}

VectorField::VectorField(std::vector<std::string> vars, std::vector<RatFunc> components,
                         std::vector<DiffParam> diff_params)
    : vars_(std::move(vars)), diff_params_(std::move(diff_params)) {
  if (components.size() != vars_.size()) {
    throw Error(ErrorKind::InvalidArgument, "one component per variable is required");
  }
  for (std::size_t i = 0; i < vars_.size(); ++i) {
    for (std::size_t j = i + 1; j < vars_.size(); ++j) {
      if (vars_[i] == vars_[j]) throw Error(ErrorKind::InvalidArgument, "variable " + vars_[i] + " declared twice");
    }
  }
  for (const auto& d : diff_params_) {
    if (std::find(vars_.begin(), vars_.end(), d.name) != vars_.end()) {
      throw Error(ErrorKind::InvalidArgument, "differential parameter " + d.name + " clashes with a variable");
    }
    if (d.coefficient.contains(Symbol(d.name))) {
      throw Error(ErrorKind::InvalidArgument, "derivative of " + d.name + " is not of the declared form");
    }
  }
  for (auto& c : components) {
    for (const auto& v : c.numerator().used_variables()) {
      if (std::find(vars_.begin(), vars_.end(), v) == vars_.end()) {
        throw Error(ErrorKind::UnknownVariable, "component uses unknown variable " + v);
      }
    }
    for (const auto& v : c.denominator().used_variables()) {
      if (std::find(vars_.begin(), vars_.end(), v) == vars_.end()) {
        throw Error(ErrorKind::UnknownVariable, "component uses unknown variable " + v);
      }
    }
    components_.push_back(c.over(vars_));
  }
}

const DiffParam* VectorField::find_diff_param(const std::string& name) const {
  for (const auto& d : diff_params_) {
    if (d.name == name) return &d;
  }
  return nullptr;
}

bool VectorField::is_polynomial() const {
  return std::all_of(components_.begin(), components_.end(),
                     [](const RatFunc& c) { return c.is_polynomial(); });
}

MultiPoly VectorField::polynomial_component(std::size_t i) const {
  if (!components_[i].is_polynomial()) {
    throw Error(ErrorKind::NotPolynomialField, "component " + vars_[i] + "' is not polynomial");
  }
  return components_[i].numerator();
}

unsigned VectorField::degree() const {
  unsigned d = 0;
  for (std::size_t i = 0; i < components_.size(); ++i) d = std::max(d, polynomial_component(i).total_degree());
  return d;
}

VectorField VectorField::substitute_parameters(const std::map<Symbol, Scalar>& values) const {
  std::vector<RatFunc> comps;
  for (const auto& c : components_) comps.push_back(c.substitute_parameters(values));
  std::vector<DiffParam> dps = diff_params_;
  for (auto& d : dps) d.coefficient = d.coefficient.substitute(values);
  return VectorField(vars_, comps, dps);
}

std::string VectorField::to_string() const {
  std::string out;
  for (std::size_t i = 0; i < vars_.size(); ++i) {
    if (i > 0) out += "; ";
    out += vars_[i] + "' = " + components_[i].to_string();
  }
  for (const auto& d : diff_params_) out += "; " + d.name + "' = " + d.derivative().to_string();
  return out;
}

Scalar coefficient_derivative(const VectorField& s, const Scalar& c) {
  Scalar out;
  for (const auto& d : s.diff_params()) {
    Symbol z(d.name);
    if (!c.contains(z)) continue;
    out += c.derivative(z) * d.derivative();
  }
  return out;
}

namespace {

void check_variables(const VectorField& s, const std::vector<std::string>& used) {
  for (const auto& v : used) {
    bool known = std::find(s.variables().begin(), s.variables().end(), v) != s.variables().end() ||
                 s.find_diff_param(v) != nullptr;
    if (!known) throw Error(ErrorKind::UnknownVariable, "variable " + v + " is not part of the field");
  }
}

}  // namespace

MultiPoly lie_derivative(const VectorField& s, const MultiPoly& p) {
  check_variables(s, p.used_variables());
  std::vector<std::string> vars = union_variables(s.variables(), p.variables());
  MultiPoly q = p.over(vars);
  MultiPoly out(vars);
  for (std::size_t i = 0; i < s.dimension(); ++i) {
    MultiPoly dp = q.derivative(s.variables()[i]);
    if (dp.is_zero()) continue;
    out += s.polynomial_component(i).over(vars) * dp;
  }
  for (const auto& d : s.diff_params()) {
    if (q.degree_in(d.name) == 0) continue;
    MultiPoly zprime = d.mode == DiffParam::Mode::Log
                           ? MultiPoly::variable(vars, d.name).scaled(d.coefficient)
                           : MultiPoly::constant(vars, d.coefficient);
    out += q.derivative(d.name) * zprime;
  }
  if (!s.diff_params().empty()) {
    out += q.map_coefficients([&](const Scalar& c) { return coefficient_derivative(s, c); });
  }
  return out;
}

RatFunc lie_derivative(const VectorField& s, const RatFunc& f) {
  check_variables(s, f.numerator().used_variables());
  check_variables(s, f.denominator().used_variables());
  std::vector<std::string> vars = union_variables(s.variables(), f.variables());
  RatFunc g = f.over(vars);
  RatFunc out(vars);
  for (std::size_t i = 0; i < s.dimension(); ++i) {
    RatFunc dg = g.derivative(s.variables()[i]);
    if (dg.is_zero()) continue;
    out += s.components()[i].over(vars) * dg;
  }
  for (const auto& d : s.diff_params()) {
    if (g.numerator().degree_in(d.name) == 0 && g.denominator().degree_in(d.name) == 0) continue;
    MultiPoly zprime = d.mode == DiffParam::Mode::Log
                           ? MultiPoly::variable(vars, d.name).scaled(d.coefficient)
                           : MultiPoly::constant(vars, d.coefficient);
    out += g.derivative(d.name) * RatFunc(zprime);
  }
  if (!s.diff_params().empty()) {
    auto delta = [&](const Scalar& c) { return coefficient_derivative(s, c); };
    const MultiPoly& n = g.numerator();
    const MultiPoly& m = g.denominator();
    MultiPoly dn = n.map_coefficients(delta);
    MultiPoly dm = m.map_coefficients(delta);
    out += RatFunc(dn * m - n * dm, m * m);
  }
  return out;
}

std::optional<MultiPoly> is_invariant(const VectorField& s, const MultiPoly& p) {
  if (p.is_zero()) throw Error(ErrorKind::ZeroPolynomial, "the zero polynomial has no cofactor");
  if (!s.is_polynomial()) {
    throw Error(ErrorKind::NotPolynomialField, "clear denominators before testing invariance");
  }
  return exact_divides(p, lie_derivative(s, p));
}

SingularPointSet singular_points(const VectorField& s) {
  if (s.dimension() != 2) throw Error(ErrorKind::UnsupportedDegree, "singular points need a planar field");
  if (!s.is_polynomial()) throw Error(ErrorKind::UnsupportedDegree, "singular points need a polynomial field");
  if (s.degree() > 2) throw Error(ErrorKind::UnsupportedDegree, "singular points need degree at most 2");
  const auto& vars = s.variables();
  PlanarSolutions sol = solve_planar_system({s.polynomial_component(0), s.polynomial_component(1)}, vars[0], vars[1]);
  SingularPointSet out;
  out.nonrational_discarded = sol.nonrational_discarded;
  out.certified = sol.certified;
  for (const auto& [x, y] : sol.points) out.points.push_back({x, y});
  return out;
}

Matrix jacobian_at(const VectorField& s, const std::vector<Scalar>& point) {
  std::size_t n = s.dimension();
  std::map<std::string, Scalar> pt;
  for (std::size_t i = 0; i < n; ++i) pt[s.variables()[i]] = point.at(i);
  Matrix j(n, n);
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t c = 0; c < n; ++c) {
      j.at(r, c) = s.components()[r].derivative(s.variables()[c]).evaluate(pt);
    }
  }
  return j;
}

}  // namespace invcurve
