#include "invcurve/darboux/darboux.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <set>

#include "invcurve/algebra/roots.hpp"
#include "invcurve/error.hpp"

namespace invcurve {

std::string DefinitionField::to_string() const {
  return kind == Kind::Constants ? "CONSTANTS" : "DIFF_PARAM(" + diff_param + ")";
}

const char* completeness_name(Completeness c) {
  return c == Completeness::CompleteUpToBound ? "COMPLETE_UP_TO_BOUND" : "PARTIAL";
}

namespace {

std::vector<Exponents> monomials_up_to(unsigned n) {
  std::vector<Exponents> out;
  for (unsigned d = n + 1; d-- > 0;) {
    for (unsigned i = d + 1; i-- > 0;) out.push_back({i, d - i});
  }
  return out;
}

struct PointData {
  std::vector<Scalar> point;
  Scalar trace;
  Scalar disc;
  std::optional<Scalar> root;  // sqrt of the discriminant when it lies in the field
};

struct LinearFactor {
  MultiPoly form;
  unsigned degree;
  MultiPoly cofactor;
};

class Search {
 public:
  Search(const VectorField& s, unsigned max_degree) : s_(s), vars_(s.variables()) {
    report_.degree_bound = max_degree;
    for (std::size_t i = 0; i < 2; ++i) comps_.push_back(s.polynomial_component(i));
    degree_ = s.degree();
  }

  DarbouxReport run() {
    if (!s_.diff_params().empty()) {
      report_.caveats.push_back("differential parameters are treated as constants during the search");
    }
    prepare_points();
    prepare_top_factors();
    for (unsigned n = 1; n <= report_.degree_bound; ++n) search_degree(n);
    finish();
    return report_;
  }

 private:
  void partial(const std::string& why) {
    report_.completeness = Completeness::Partial;
    if (std::find(report_.caveats.begin(), report_.caveats.end(), why) == report_.caveats.end()) {
      report_.caveats.push_back(why);
    }
  }

  void add_condition(const Scalar& value) {
    Poly num = value.numerator();
    if (num.is_constant()) return;
    Monomial content = num.terms().front().first;
    for (const auto& t : num.terms()) content = content.gcd(t.first);
    for (const auto& [sym, e] : content.powers()) record_condition(Poly::variable(sym));
    Poly rest = *divide_exact(num, Poly::monomial(content, 1));
    for (const auto& c : conditions_) {
      while (!rest.is_constant()) {
        auto q = divide_exact(rest, c);
        if (!q) break;
        rest = *q;
      }
    }
    if (!rest.is_constant()) record_condition(rest);
  }

  void record_condition(const Poly& p) {
    Poly c = p.primitive_integer();
    for (const auto& existing : conditions_) {
      if (existing == c) return;
    }
    conditions_.push_back(c);
  }

  void prepare_points() {
    if (degree_ == 0) return;
    try {
      SingularPointSet sp = singular_points(s_);
      if (!sp.certified) partial("singular point extraction left a symbolic factor unresolved");
      for (const auto& p : sp.points) {
        Matrix j = jacobian_at(s_, p);
        PointData pd;
        pd.point = p;
        pd.trace = j.at(0, 0) + j.at(1, 1);
        Scalar det = j.at(0, 0) * j.at(1, 1) - j.at(0, 1) * j.at(1, 0);
        pd.disc = pd.trace * pd.trace - Scalar(4) * det;
        pd.root = sqrt_exact(pd.disc);
        points_.push_back(std::move(pd));
      }
    } catch (const Error& e) {
      if (e.kind() != ErrorKind::PositiveDimensionalSingularLocus) throw;
      report_.caveats.push_back("singular locus is positive dimensional; cofactors from eigenvalues of the linear system");
    }
  }

  void prepare_top_factors() {
    if (degree_ < 2) return;
    MultiPoly p2 = comps_[0].homogeneous_part(2);
    MultiPoly q2 = comps_[1].homogeneous_part(2);
    MultiPoly x = MultiPoly::variable(vars_, vars_[0]);
    MultiPoly y = MultiPoly::variable(vars_, vars_[1]);
    MultiPoly cubic = x * q2 - y * p2;
    if (cubic.is_zero()) {
      radial_ = *exact_divides(x, p2.is_zero() ? MultiPoly(vars_) : p2);
      if (p2.is_zero()) radial_ = *exact_divides(y, q2);
      return;
    }
    auto top_cofactor = [&](const MultiPoly& form) {
      MultiPoly flow = p2 * form.derivative(vars_[0]) + q2 * form.derivative(vars_[1]);
      auto k = exact_divides(form, flow);
      if (!k) throw Error(ErrorKind::InvalidArgument, "internal: top form is not invariant");
      return *k;
    };
    // dehomogenize with t = x/y
    std::vector<Scalar> coeffs(4);
    for (const auto& [e, c] : cubic.terms()) coeffs[e[0]] = c;
    unsigned top = 3;
    while (coeffs[top].is_zero()) --top;
    unsigned y_power = 3 - top;
    if (y_power > 0) top_factors_.push_back({y, 1, top_cofactor(y)});
    if (top == 0) return;
    coeffs.resize(top + 1);
    RootExtraction roots = rational_roots(coeffs);
    if (!roots.certified) partial("the cubic of lines at infinity has an unresolved symbolic factor");
    MultiPoly rest = cubic;
    for (unsigned k = 0; k < y_power; ++k) rest = *exact_divides(y, rest);
    for (const auto& r : roots.roots) {
      MultiPoly line = x - y.scaled(r);
      top_factors_.push_back({line.primitive(), 1, top_cofactor(line)});
      while (auto q = exact_divides(line, rest)) rest = *q;
    }
    if (!rest.is_constant()) {
      MultiPoly form = rest.primitive();
      top_factors_.push_back({form, form.total_degree(), top_cofactor(form)});
    }
  }

  std::vector<MultiPoly> top_cofactors(unsigned n) {
    std::vector<MultiPoly> out;
    if (degree_ < 2) {
      out.push_back(MultiPoly(vars_));
      return out;
    }
    if (radial_) {
      out.push_back(radial_->scaled(Scalar(static_cast<long>(n))));
      return out;
    }
    std::map<std::string, MultiPoly> unique;
    std::vector<unsigned> mult(top_factors_.size(), 0);
    std::function<void(std::size_t, unsigned)> rec = [&](std::size_t i, unsigned left) {
      if (i == top_factors_.size()) {
        if (left != 0) return;
        MultiPoly k(vars_);
        for (std::size_t f = 0; f < mult.size(); ++f) {
          k += top_factors_[f].cofactor.scaled(Scalar(static_cast<long>(mult[f])));
        }
        unique.emplace(k.to_string(), k);
        return;
      }
      for (unsigned m = 0; m * top_factors_[i].degree <= left; ++m) {
        mult[i] = m;
        rec(i + 1, left - m * top_factors_[i].degree);
      }
      mult[i] = 0;
    };
    rec(0, n);
    for (auto& [key, k] : unique) out.push_back(k);
    return out;
  }

  std::vector<Scalar> sums(const PointData& pd, unsigned n) const {
    std::vector<Scalar> out{Scalar()};
    auto push = [&](const Scalar& v) {
      if (std::find(out.begin(), out.end(), v) == out.end()) out.push_back(v);
    };
    for (unsigned i = 0; i <= n; ++i) {
      for (unsigned j = 0; i + j <= n; ++j) {
        if (i + j == 0) continue;
        if (pd.root) {
          Scalar l1 = (pd.trace + *pd.root) / Scalar(2);
          Scalar l2 = (pd.trace - *pd.root) / Scalar(2);
          push(l1 * Scalar(static_cast<long>(i)) + l2 * Scalar(static_cast<long>(j)));
        } else if (i == j) {
          push(pd.trace * Scalar(static_cast<long>(i)));
        }
      }
    }
    return out;
  }

  bool admissible(const PointData& pd, unsigned n, const Scalar& value, const MultiPoly& k) {
    std::vector<Scalar> allowed = sums(pd, n);
    if (std::find(allowed.begin(), allowed.end(), value) != allowed.end()) return true;
    for (const auto& a : allowed) probe_condition(value - a, k, n);
    if (!pd.root) {
      for (unsigned i = 0; i <= n; ++i) {
        for (unsigned j = 0; i + j <= n; ++j) {
          if (i == j) continue;
          Scalar mid = pd.trace * Scalar::rational(static_cast<long>(i + j), 2);
          Scalar t = Scalar::rational(static_cast<long>(i) - static_cast<long>(j), 2);
          Scalar gap = value - mid;
          probe_condition(gap * gap - t * t * pd.disc, k, n);
        }
      }
    }
    return false;
  }

  // Records a factor of the condition when specializing onto it gives k an invariant polynomial.
  void probe_condition(const Scalar& value, const MultiPoly& k, unsigned n) {
    Poly num = value.numerator();
    if (num.is_constant()) return;
    Monomial content = num.terms().front().first;
    for (const auto& t : num.terms()) content = content.gcd(t.first);
    std::vector<Poly> pieces;
    for (const auto& [sym, e] : content.powers()) pieces.push_back(Poly::variable(sym));
    Poly rest = *divide_exact(num, Poly::monomial(content, 1));
    split_rational_factors(rest, pieces);
    for (const auto& piece : pieces) {
      if (std::find(conditions_.begin(), conditions_.end(), piece) != conditions_.end()) continue;
      std::string key = piece.to_string() + "|" + k.to_string() + "|" + std::to_string(n);
      if (!probed_.insert(key).second) continue;
      if (specialization_has_solutions(piece, k, n)) record_condition(piece);
    }
  }

  static void split_rational_factors(Poly rest, std::vector<Poly>& pieces) {
    while (!rest.is_constant()) {
      bool split = false;
      for (Symbol sym : rest.symbols()) {
        std::vector<Scalar> coeffs;
        for (const auto& c : rest.coefficients_in(sym)) coeffs.push_back(Scalar(c));
        if (coeffs.size() <= 2) continue;
        RootExtraction roots = rational_roots(coeffs);
        if (roots.roots.empty()) continue;
        Poly factor = (Scalar(Poly::variable(sym)) - roots.roots.front()).numerator().primitive_integer();
        auto q = divide_exact(rest, factor);
        if (!q) continue;
        pieces.push_back(factor);
        rest = *q;
        split = true;
        break;
      }
      if (!split) {
        pieces.push_back(rest.primitive_integer());
        return;
      }
    }
  }

  bool specialization_has_solutions(const Poly& piece, const MultiPoly& k, unsigned n) {
    for (Symbol sym : piece.symbols()) {
      std::vector<Scalar> coeffs;
      for (const auto& c : piece.coefficients_in(sym)) coeffs.push_back(Scalar(c));
      RootExtraction roots = rational_roots(coeffs);
      if (!roots.certified) return true;
      for (const auto& r : roots.roots) {
        std::map<Symbol, Scalar> at{{sym, r}};
        std::vector<MultiPoly> comps;
        for (const auto& c : comps_) comps.push_back(c.substitute_parameters(at));
        MultiPoly kk = k.substitute_parameters(at);
        if (has_new_solution(comps, kk, n, at)) return true;
      }
      if (!roots.roots.empty()) return false;
    }
    return false;
  }

  bool has_new_solution(const std::vector<MultiPoly>& comps, const MultiPoly& k, unsigned n,
                        const std::map<Symbol, Scalar>& at) const {
    Nullspace ns = invariant_space(comps, k, n);
    if (ns.basis.size() != 1) return !ns.basis.empty();
    std::vector<Exponents> cols = monomials_up_to(n);
    if (k.is_zero()) cols.pop_back();
    MultiPoly p(vars_);
    for (std::size_t c = 0; c < cols.size(); ++c) p.add_term(cols[c], ns.basis[0][c]);
    for (const auto& curve : report_.curves) {
      MultiPoly known = curve.poly.substitute_parameters(at);
      if (!known.is_constant() && exact_divides(known, p)) return false;
    }
    return true;
  }

  Nullspace invariant_space(const std::vector<MultiPoly>& comps, const MultiPoly& k, unsigned n) const {
    std::vector<Exponents> cols = monomials_up_to(n);
    if (k.is_zero()) cols.pop_back();
    std::vector<MultiPoly> images;
    for (const auto& e : cols) {
      MultiPoly m = MultiPoly::monomial(vars_, e, Scalar(1));
      images.push_back(comps[0] * m.derivative(vars_[0]) + comps[1] * m.derivative(vars_[1]));
    }
    return nullspace(operator_matrix(images, cols, k, n));
  }

  Matrix operator_matrix(const std::vector<MultiPoly>& images, const std::vector<Exponents>& cols,
                         const MultiPoly& k, unsigned n) const {
    unsigned top = n + (degree_ > 0 ? degree_ - 1 : 0);
    std::vector<Exponents> rows = monomials_up_to(top);
    std::map<Exponents, std::size_t> row_index;
    for (std::size_t r = 0; r < rows.size(); ++r) row_index[rows[r]] = r;
    Matrix m(rows.size(), cols.size());
    for (std::size_t c = 0; c < cols.size(); ++c) {
      MultiPoly col = images[c] - k * MultiPoly::monomial(vars_, cols[c], Scalar(1));
      for (const auto& [e, v] : col.terms()) m.at(row_index.at(e), c) = v;
    }
    return m;
  }

  std::vector<Scalar> constant_candidates(const MultiPoly& k1, unsigned n,
                                          const std::vector<MultiPoly>& images,
                                          const std::vector<Exponents>& basis) {
    if (degree_ == 0) return {Scalar()};
    if (!points_.empty()) {
      std::vector<Scalar> out;
      auto value_at = [&](const PointData& pd) {
        std::map<std::string, Scalar> pt{{vars_[0], pd.point[0]}, {vars_[1], pd.point[1]}};
        return k1.evaluate(pt);
      };
      Scalar base = value_at(points_[0]);
      for (const auto& v : sums(points_[0], n)) {
        Scalar k0 = v - base;
        bool ok = true;
        for (std::size_t p = 1; p < points_.size() && ok; ++p) {
          ok = admissible(points_[p], n, k0 + value_at(points_[p]), k1 + MultiPoly::constant(vars_, k0));
        }
        if (ok && std::find(out.begin(), out.end(), k0) == out.end()) out.push_back(k0);
      }
      return out;
    }
    // eigenvalues of the square block of the operator on polynomials of degree <= n
    Matrix full = operator_matrix(images, basis, k1, n);
    Matrix square(basis.size(), basis.size());
    std::vector<Exponents> rows = monomials_up_to(n + (degree_ > 0 ? degree_ - 1 : 0));
    for (std::size_t c = 0; c < basis.size(); ++c) {
      for (std::size_t r = 0; r < basis.size(); ++r) {
        auto it = std::find(rows.begin(), rows.end(), basis[r]);
        square.at(r, c) = full.at(static_cast<std::size_t>(it - rows.begin()), c);
      }
    }
    RootExtraction roots = rational_roots(characteristic_polynomial(square));
    if (!roots.certified) partial("eigenvalue extraction left a symbolic factor unresolved");
    return roots.roots;
  }

  void search_degree(unsigned n) {
    std::vector<Exponents> basis = monomials_up_to(n);
    std::vector<MultiPoly> images;
    for (const auto& e : basis) {
      MultiPoly m = MultiPoly::monomial(vars_, e, Scalar(1));
      images.push_back(comps_[0] * m.derivative(vars_[0]) + comps_[1] * m.derivative(vars_[1]));
    }
    std::map<std::string, MultiPoly> candidates;
    for (const auto& k1 : top_cofactors(n)) {
      for (const auto& k0 : constant_candidates(k1, n, images, basis)) {
        MultiPoly k = k1 + MultiPoly::constant(vars_, k0);
        candidates.emplace(k.to_string(), k);
      }
    }
    for (const auto& [key, k] : candidates) solve_candidate(n, k);
  }

  void solve_candidate(unsigned n, const MultiPoly& k) {
    std::vector<Exponents> cols = monomials_up_to(n);
    if (k.is_zero()) cols.pop_back();
    Nullspace ns = invariant_space(comps_, k, n);
    for (const auto& p : ns.symbolic_pivots) add_condition(p);
    if (ns.basis.empty()) return;
    std::vector<MultiPoly> polys;
    for (const auto& v : ns.basis) {
      MultiPoly p(vars_);
      for (std::size_t c = 0; c < cols.size(); ++c) p.add_term(cols[c], v[c]);
      polys.push_back(p.primitive());
    }
    if (k.is_zero()) polys.insert(polys.begin(), MultiPoly::constant(vars_, Scalar(1)));
    if (polys.size() == 1) {
      const MultiPoly& p = polys[0];
      if (p.total_degree() != n) return;
      for (const auto& c : report_.curves) {
        if (exact_divides(c.poly, p)) return;
      }
      for (const auto& pen : report_.pencils) {
        for (const auto& b : pen.basis) {
          if (!b.is_constant() && exact_divides(b, p)) return;
        }
      }
      auto cof = is_invariant(s_, p);
      if (!cof) throw Error(ErrorKind::InvalidArgument, "internal: nullspace element is not invariant");
      report_.curves.push_back({p, *cof, {}});
      return;
    }
    MultiPoly g = polys[0];
    for (std::size_t i = 1; i < polys.size(); ++i) g = multivariate_gcd(g, polys[i]);
    if (!g.is_constant()) return;
    for (const auto& pen : report_.pencils) {
      if (pen.cofactor == k) return;
    }
    report_.pencils.push_back({k, polys});
    partial("a pencil of invariant curves (rational first integral) exists");
  }

  void finish() {
    std::sort(report_.curves.begin(), report_.curves.end(), [](const InvariantCurve& a, const InvariantCurve& b) {
      if (a.poly.total_degree() != b.poly.total_degree()) return a.poly.total_degree() < b.poly.total_degree();
      return a.poly.to_string() < b.poly.to_string();
    });
    std::sort(conditions_.begin(), conditions_.end(), [](const Poly& a, const Poly& b) {
      if (a.total_degree() != b.total_degree()) return a.total_degree() < b.total_degree();
      return a.to_string() < b.to_string();
    });
    for (const auto& c : conditions_) report_.branching_conditions.push_back(Scalar(c));
  }

  const VectorField& s_;
  std::vector<std::string> vars_;
  std::vector<MultiPoly> comps_;
  unsigned degree_ = 0;
  std::vector<PointData> points_;
  std::vector<LinearFactor> top_factors_;
  std::optional<MultiPoly> radial_;
  std::vector<Poly> conditions_;
  std::set<std::string> probed_;
  DarbouxReport report_;
};

}  // namespace

DarbouxReport darboux_search(const VectorField& s, unsigned max_degree) {
  if (max_degree < 1) throw Error(ErrorKind::InvalidArgument, "max_degree must be at least 1");
  if (s.dimension() != 2) throw Error(ErrorKind::UnsupportedDegree, "the search needs a planar field");
  if (!s.is_polynomial()) throw Error(ErrorKind::NotPolynomialField, "clear denominators before the search");
  if (s.degree() > 2) throw Error(ErrorKind::UnsupportedDegree, "the search supports fields of degree at most 2");
  return Search(s, max_degree).run();
}

InvariantCurve invariant_family_b_eq_d(const Scalar& a, const Scalar& b, const Scalar& c) {
  if (a.is_zero() || b.is_zero() || c.is_zero()) {
    throw Error(ErrorKind::DegenerateParameters, "a, b, c must be nonzero");
  }
  std::vector<std::string> vars{"X", "Y"};
  MultiPoly x = MultiPoly::variable(vars, "X");
  MultiPoly y = MultiPoly::variable(vars, "Y");
  MultiPoly one = MultiPoly::constant(vars, Scalar(1));
  VectorField s(vars, {RatFunc(x * (y.scaled(a) + one.scaled(b))), RatFunc(y * (x.scaled(c) + one.scaled(b)))},
                {DiffParam{"z", DiffParam::Mode::Log, b}});
  MultiPoly curve = x.scaled(c) - y.scaled(a) - MultiPoly::constant(vars, Scalar::symbol("z"));
  auto cof = is_invariant(s, curve);
  if (!cof) throw Error(ErrorKind::InvalidArgument, "internal: family member is not invariant");
  return {curve, *cof, {DefinitionField::Kind::DiffParam, "z"}};
}

VectorField clear_denominators(const VectorField& s) {
  MultiPoly l = MultiPoly::constant(s.variables(), Scalar(1));
  for (const auto& c : s.components()) {
    const MultiPoly& d = c.denominator();
    if (d.is_constant()) continue;
    l = *exact_divides(multivariate_gcd(l, d), l * d);
  }
  std::vector<RatFunc> comps;
  for (const auto& c : s.components()) comps.push_back(c * RatFunc(l));
  return VectorField(s.variables(), comps, s.diff_params());
}

}  // namespace invcurve
