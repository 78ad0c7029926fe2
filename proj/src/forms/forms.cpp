#include "invcurve/forms/forms.hpp"

#include <algorithm>
#include <numeric>

#include "invcurve/error.hpp"

namespace invcurve {

namespace {

std::string differential_name(const std::vector<std::string>& vars, const DForm::Index& index) {
  std::string out;
  for (std::size_t k = 0; k < index.size(); ++k) {
    if (k > 0) out += "^";
    out += "d" + vars[index[k]];
  }
  return out;
}

DForm reindexed(const DForm& w, const std::vector<std::string>& vars) {
  if (w.variables() == vars) return w;
  DForm out(vars, w.arity());
  for (const auto& [index, f] : w.coefficients()) {
    DForm::Index moved;
    for (unsigned i : index) {
      auto it = std::find(vars.begin(), vars.end(), w.variables()[i]);
      moved.push_back(static_cast<unsigned>(it - vars.begin()));
    }
    out = out + DForm::term(vars, f, moved);
  }
  return out;
}

std::pair<DForm, DForm> aligned(const DForm& a, const DForm& b) {
  std::vector<std::string> vars = union_variables(a.variables(), b.variables());
  return {reindexed(a, vars), reindexed(b, vars)};
}

}  // namespace

DForm::DForm(std::vector<std::string> vars, unsigned arity) : vars_(std::move(vars)), arity_(arity) {}

DForm DForm::function(std::vector<std::string> vars, const RatFunc& f) {
  DForm out(std::move(vars), 0);
  out.add({}, f);
  return out;
}

DForm DForm::differential(std::vector<std::string> vars, const std::string& var) {
  auto it = std::find(vars.begin(), vars.end(), var);
  if (it == vars.end()) throw Error(ErrorKind::UnknownVariable, "unknown coordinate " + var);
  unsigned i = static_cast<unsigned>(it - vars.begin());
  RatFunc one = RatFunc::constant(vars, Scalar(1));
  return term(std::move(vars), one, {i});
}

DForm DForm::term(std::vector<std::string> vars, const RatFunc& f, const Index& indices) {
  DForm out(std::move(vars), static_cast<unsigned>(indices.size()));
  Index sorted = indices;
  bool negative = false;
  for (std::size_t i = 0; i < sorted.size(); ++i) {
    for (std::size_t j = 0; j + 1 < sorted.size() - i; ++j) {
      if (sorted[j] > sorted[j + 1]) {
        std::swap(sorted[j], sorted[j + 1]);
        negative = !negative;
      }
    }
  }
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) return out;
  out.add(sorted, negative ? -f : f);
  return out;
}

RatFunc DForm::coefficient(const Index& index) const {
  auto it = coeffs_.find(index);
  return it == coeffs_.end() ? RatFunc(vars_) : it->second;
}

void DForm::add(const Index& index, const RatFunc& f) {
  if (f.is_zero()) return;
  if (index.size() != arity_) throw Error(ErrorKind::InvalidArgument, "arity mismatch");
  RatFunc g = f.over(union_variables(vars_, f.variables()));
  auto it = coeffs_.find(index);
  if (it == coeffs_.end()) {
    coeffs_.emplace(index, g);
    return;
  }
  it->second = it->second + g;
  if (it->second.is_zero()) coeffs_.erase(it);
}

DForm DForm::operator+(const DForm& o) const {
  if (is_zero() && o.is_zero()) return DForm(union_variables(vars_, o.vars_), std::max(arity_, o.arity_));
  if (is_zero()) return reindexed(o, union_variables(vars_, o.vars_));
  if (o.is_zero()) return reindexed(*this, union_variables(vars_, o.vars_));
  if (arity_ != o.arity_) throw Error(ErrorKind::InvalidArgument, "cannot add forms of different arity");
  auto [a, b] = aligned(*this, o);
  for (const auto& [index, f] : b.coeffs_) a.add(index, f);
  return a;
}

DForm DForm::operator-() const {
  DForm out(vars_, arity_);
  for (const auto& [index, f] : coeffs_) out.add(index, -f);
  return out;
}

DForm DForm::operator-(const DForm& o) const { return *this + (-o); }

DForm DForm::scaled(const RatFunc& f) const {
  DForm out(vars_, arity_);
  for (const auto& [index, g] : coeffs_) out.add(index, g * f);
  return out;
}

std::string DForm::to_string() const {
  if (coeffs_.empty()) return "0";
  std::string out;
  for (const auto& [index, f] : coeffs_) {
    if (!out.empty()) out += " + ";
    if (index.empty()) {
      out += f.to_string();
    } else if (f == RatFunc::constant(vars_, Scalar(1))) {
      out += differential_name(vars_, index);
    } else {
      out += "(" + f.to_string() + ")*" + differential_name(vars_, index);
    }
  }
  return out;
}

bool operator==(const DForm& a, const DForm& b) {
  if (a.is_zero() || b.is_zero()) return a.is_zero() && b.is_zero();
  if (a.arity() != b.arity()) return false;
  auto [x, y] = aligned(a, b);
  return (x - y).is_zero();
}

DForm exterior_derivative(const DForm& w) {
  const auto& vars = w.variables();
  DForm out(vars, w.arity() + 1);
  for (const auto& [index, f] : w.coefficients()) {
    for (unsigned j = 0; j < vars.size(); ++j) {
      if (std::find(index.begin(), index.end(), j) != index.end()) continue;
      RatFunc df = f.derivative(vars[j]);
      if (df.is_zero()) continue;
      DForm::Index full{j};
      full.insert(full.end(), index.begin(), index.end());
      out = out + DForm::term(vars, df, full);
    }
  }
  return out;
}

DForm wedge(const DForm& a, const DForm& b) {
  auto [x, y] = aligned(a, b);
  DForm out(x.variables(), a.arity() + b.arity());
  for (const auto& [i, f] : x.coefficients()) {
    for (const auto& [j, g] : y.coefficients()) {
      DForm::Index full = i;
      full.insert(full.end(), j.begin(), j.end());
      out = out + DForm::term(x.variables(), f * g, full);
    }
  }
  return out;
}

namespace {

RatFunc direction_component(const VectorField& s, const std::vector<std::string>& vars, const std::string& name) {
  const auto& sv = s.variables();
  auto it = std::find(sv.begin(), sv.end(), name);
  if (it != sv.end()) return s.components()[static_cast<std::size_t>(it - sv.begin())];
  if (const DiffParam* d = s.find_diff_param(name)) {
    if (d->mode == DiffParam::Mode::Const) return RatFunc::constant(vars, d->coefficient);
    return RatFunc(MultiPoly::variable(vars, name).scaled(d->coefficient));
  }
  throw Error(ErrorKind::UnknownVariable, "coordinate " + name + " is not a direction of the field");
}

}  // namespace

DForm interior_product(const VectorField& s, const DForm& w) {
  if (w.arity() == 0) throw Error(ErrorKind::ArityZero, "interior product of a 0-form");
  std::vector<std::string> vars = union_variables(w.variables(), s.variables());
  DForm form = reindexed(w, vars);
  DForm out(vars, w.arity() - 1);
  for (const auto& [index, f] : form.coefficients()) {
    for (std::size_t k = 0; k < index.size(); ++k) {
      RatFunc v = direction_component(s, vars, vars[index[k]]);
      DForm::Index rest = index;
      rest.erase(rest.begin() + static_cast<long>(k));
      RatFunc c = f * v;
      out = out + DForm::term(vars, k % 2 == 0 ? c : -c, rest);
    }
  }
  return out;
}

DForm lie_derivative_form(const VectorField& s, const DForm& w) {
  DForm out = interior_product(s, exterior_derivative(w));
  if (w.arity() > 0) out = out + exterior_derivative(interior_product(s, w));
  return out;
}

bool is_invariant_form(const VectorField& s, const DForm& w) { return lie_derivative_form(s, w).is_zero(); }

DForm log_differential(const std::vector<std::string>& vars, const RatFunc& v) {
  if (v.is_zero()) throw Error(ErrorKind::ZeroPolynomial, "logarithmic differential of zero");
  RatFunc inverse = RatFunc::constant(vars, Scalar(1)) / v;
  return exterior_derivative(DForm::function(vars, v)).scaled(inverse);
}

DForm LogCombination::to_form() const {
  DForm out = exterior_derivative(DForm::function(vars, exact_part));
  for (const auto& t : log_terms) {
    out = out + log_differential(vars, t.argument).scaled(RatFunc::constant(vars, t.coefficient));
  }
  return out;
}

namespace {

std::vector<mpq_class> basis_coordinates(const Scalar& c, const std::vector<std::string>& basis) {
  std::vector<mpq_class> out(basis.size() + 1, 0);
  if (!c.denominator().is_constant()) {
    throw Error(ErrorKind::NonRepresentableCoefficient, c.to_string() + " is not in the span of the basis");
  }
  mpq_class scale = 1 / c.denominator().constant_value();
  for (const auto& [m, q] : c.numerator().terms()) {
    const auto& powers = m.powers();
    if (powers.empty()) {
      out[0] += q * scale;
      continue;
    }
    auto it = std::find(basis.begin(), basis.end(), powers[0].first.name());
    if (powers.size() != 1 || powers[0].second != 1 || it == basis.end()) {
      throw Error(ErrorKind::NonRepresentableCoefficient, c.to_string() + " is not in the span of the basis");
    }
    out[static_cast<std::size_t>(it - basis.begin()) + 1] += q * scale;
  }
  return out;
}

Scalar from_coordinates(const std::vector<mpq_class>& v, const std::vector<std::string>& basis) {
  Scalar out(v[0]);
  for (std::size_t k = 0; k < basis.size(); ++k) {
    if (v[k + 1] != 0) out = out + Scalar(v[k + 1]) * Scalar::symbol(basis[k]);
  }
  return out;
}

}  // namespace

LogCombination rosenlicht_normalize(const LogCombination& lc, const std::vector<std::string>& basis) {
  std::vector<std::vector<mpq_class>> rows;
  std::vector<RatFunc> args;
  for (const auto& t : lc.log_terms) {
    std::vector<mpq_class> r = basis_coordinates(t.coefficient, basis);
    if (std::all_of(r.begin(), r.end(), [](const mpq_class& q) { return q == 0; })) continue;
    rows.push_back(r);
    args.push_back(t.argument);
  }
  LogCombination out{lc.vars, lc.exact_part, {}};
  if (rows.empty()) return out;

  // reduced row echelon basis of the span of the coefficient vectors
  std::vector<std::vector<mpq_class>> echelon = rows;
  std::vector<std::size_t> pivots;
  std::size_t rank = 0;
  std::size_t width = basis.size() + 1;
  for (std::size_t col = 0; col < width && rank < echelon.size(); ++col) {
    std::size_t piv = rank;
    while (piv < echelon.size() && echelon[piv][col] == 0) ++piv;
    if (piv == echelon.size()) continue;
    std::swap(echelon[rank], echelon[piv]);
    mpq_class lead = echelon[rank][col];
    for (auto& x : echelon[rank]) x /= lead;
    for (std::size_t r = 0; r < echelon.size(); ++r) {
      if (r == rank || echelon[r][col] == 0) continue;
      mpq_class f = echelon[r][col];
      for (std::size_t c = 0; c < width; ++c) echelon[r][c] -= f * echelon[rank][c];
    }
    pivots.push_back(col);
    ++rank;
  }
  echelon.resize(rank);

  mpz_class common = 1;
  for (const auto& r : rows) {
    for (std::size_t p : pivots) common = lcm(common, mpz_class(r[p].get_den()));
  }
  for (std::size_t j = 0; j < rank; ++j) {
    RatFunc w = RatFunc::constant(lc.vars, Scalar(1));
    bool trivial = true;
    for (std::size_t i = 0; i < rows.size(); ++i) {
      mpq_class e = rows[i][pivots[j]] * common;
      if (e == 0) continue;
      trivial = false;
      w = w * args[i].pow(static_cast<int>(e.get_num().get_si()));
    }
    if (trivial) continue;
    std::vector<mpq_class> coeff = echelon[j];
    for (auto& x : coeff) x /= mpq_class(common);
    out.log_terms.push_back({from_coordinates(coeff, basis), w});
  }
  return out;
}

}  // namespace invcurve
