#include "invcurve/lv/lv.hpp"

#include <algorithm>
#include <cmath>
#include <set>

#include "invcurve/algebra/roots.hpp"
#include "invcurve/error.hpp"

namespace invcurve {

namespace {

const std::vector<std::string> kXY{"X", "Y"};

MultiPoly var(const std::vector<std::string>& vars, const std::string& name) { return MultiPoly::variable(vars, name); }
MultiPoly constant(const std::vector<std::string>& vars, const Scalar& c) { return MultiPoly::constant(vars, c); }

}  // namespace

LVSystem LVSystem::make(const Scalar& a, const Scalar& b, const Scalar& c, const Scalar& d, Variant variant) {
  if (a.is_zero() || b.is_zero() || c.is_zero() || d.is_zero()) {
    throw Error(ErrorKind::DegenerateParameters, "Lotka-Volterra coefficients must be nonzero");
  }
  return LVSystem{a, b, c, d, variant};
}

VectorField LVSystem::field() const {
  MultiPoly x = var(kXY, "X");
  MultiPoly y = var(kXY, "Y");
  MultiPoly xdot = x * (y.scaled(a) + constant(kXY, b));
  MultiPoly ydot = variant == Variant::Classical ? y * (x.scaled(c) + constant(kXY, d)) : y * (x.scaled(c) + y.scaled(d));
  return VectorField(kXY, {RatFunc(xdot), RatFunc(ydot)});
}

std::string LVSystem::to_string() const {
  std::string name = variant == Variant::Classical ? "LV" : "LV2d";
  return name + "_{" + a.to_string() + "," + b.to_string() + "," + c.to_string() + "," + d.to_string() + "}";
}

ScaleTransform lv_scale_transform(const LVSystem& sys) {
  if (sys.variant != LVSystem::Variant::Classical) {
    throw Error(ErrorKind::InvalidArgument, "the scale transform applies to the classical system");
  }
  ScaleTransform out{LVSystem::make(Scalar(1), sys.b, Scalar(1), sys.d), {}};
  out.map.emplace("X", var(kXY, "X").scaled(sys.c));
  out.map.emplace("Y", var(kXY, "Y").scaled(sys.a));
  return out;
}

LVSystem lv_swap_transform(const LVSystem& sys) {
  if (sys.variant != LVSystem::Variant::Classical || !sys.a.is_one() || !sys.c.is_one()) {
    throw Error(ErrorKind::NotNormalized, "the swap needs a = c = 1");
  }
  return LVSystem::make(Scalar(1), sys.d, Scalar(1), sys.b);
}

const std::vector<std::string>& BrestovskiSystem::variables() {
  static const std::vector<std::string> vars{"Z", "Zp"};
  return vars;
}

VectorField BrestovskiSystem::phase_field() const {
  const auto& vars = variables();
  RatFunc zp(var(vars, "Zp"));
  RatFunc num = -RatFunc(f.derivative("Z")) * zp;
  RatFunc den(f.derivative("Zp"));
  for (const auto& [c, g] : terms) {
    RatFunc inv = RatFunc::constant(vars, Scalar(1)) / RatFunc(g);
    num += RatFunc(g.derivative("Z")) * zp * inv.scaled(c);
    den -= RatFunc(g.derivative("Zp")) * inv.scaled(c);
  }
  if (den.is_zero()) throw Error(ErrorKind::DegenerateParameters, "the equation cannot be solved for Z''");
  return VectorField(vars, {zp, num / den});
}

BrestovskiSystem brestovski_reduce(const Scalar& b, const Scalar& d) {
  Scalar gap = b - d;
  if (gap.is_zero()) throw Error(ErrorKind::DegenerateParameters, "the reduction needs b != d");
  const auto& vars = BrestovskiSystem::variables();
  MultiPoly z = var(vars, "Z");
  MultiPoly zp = var(vars, "Zp");
  BrestovskiSystem out;
  out.f = z;
  out.terms = {{b, zp - z.scaled(b)}, {-d, zp - z.scaled(d)}};
  out.recover_x = RatFunc((zp - z.scaled(d)).scaled(gap.inverse()));
  out.recover_y = RatFunc((zp - z.scaled(b)).scaled(gap.inverse()));
  return out;
}

DForm omega1_form(const BrestovskiSystem& sys) {
  const auto& vars = BrestovskiSystem::variables();
  if (sys.terms.empty()) return DForm(vars, 2);
  VectorField s = sys.phase_field();
  RatFunc fprime = lie_derivative(s, RatFunc(sys.f));
  DForm df = exterior_derivative(DForm::function(vars, RatFunc(sys.f)));
  DForm left = df.scaled(RatFunc::constant(vars, Scalar(1)) / fprime);
  DForm right(vars, 1);
  for (const auto& [c, g] : sys.terms) {
    right = right + log_differential(vars, RatFunc(g)).scaled(RatFunc::constant(vars, c));
  }
  return wedge(left, right);
}

namespace {

OrthoDefinitions definitions(const Scalar& b1, const Scalar& d1, const Scalar& b2, const Scalar& d2, const Scalar& e,
                             const Scalar& f) {
  Scalar gap = b1 - d1;
  if (gap.is_zero()) throw Error(ErrorKind::DegenerateParameters, "b1 = d1");
  if ((b2 - d2).is_zero()) throw Error(ErrorKind::DegenerateParameters, "b2 = d2");
  return {(b2 - d1) / gap * e, (d1 - d2) / gap * e, (b2 - b1) / gap * e, (b1 - d2) / gap * e, -f / gap};
}

}  // namespace

OrthoSystem ortho_coefficient_system(const Scalar& b1, const Scalar& d1, const Scalar& b2, const Scalar& d2,
                                     const Scalar& e, const Scalar& f) {
  OrthoDefinitions defs = definitions(b1, d1, b2, d2, e, f);
  std::vector<std::string> uv{"u", "v"};
  MultiPoly u = var(uv, "u");
  MultiPoly v = var(uv, "v");
  MultiPoly x = u.scaled(defs.A) + v.scaled(defs.B) + constant(uv, d1 * defs.G);
  MultiPoly y = u.scaled(defs.C) + v.scaled(defs.D) + constant(uv, b1 * defs.G);
  MultiPoly udot = u * (v + constant(uv, b2));
  MultiPoly vdot = v * (u + constant(uv, d2));
  MultiPoly xdot_direct = x * (y + constant(uv, b1));
  MultiPoly xdot_chain = udot.scaled(defs.A) + vdot.scaled(defs.B);
  return {defs, xdot_direct - xdot_chain};
}

MultiPoly ortho_coefficient_display(const OrthoDefinitions& k, const Scalar& b1, const Scalar& d1, const Scalar& b2,
                                    const Scalar& d2) {
  std::vector<std::string> uv{"u", "v"};
  MultiPoly out(uv);
  out.add_term({2, 0}, k.A * k.C);
  out.add_term({0, 2}, k.B * k.D);
  out.add_term({1, 1}, k.A * k.D + k.C * k.B - k.A - k.B);
  out.add_term({1, 0}, b1 * k.A * k.G + d1 * k.C * k.G + b1 * k.A - b2 * k.A);
  out.add_term({0, 1}, d1 * k.G * k.D + b1 * k.G * k.B + b1 * k.B - d2 * k.B);
  out.add_term({0, 0}, b1 * d1 * k.G * k.G + b1 * d1 * k.G);
  return out;
}

const char* case_name(TransformSolution::Case c) {
  return c == TransformSolution::Case::Direct ? "DIRECT" : "SWAPPED";
}

namespace {

struct Branch {
  std::map<Symbol, Scalar> subs;
  std::vector<Scalar> constraints;
};

Scalar apply(const Branch& br, const Scalar& s) { return br.subs.empty() ? s : s.substitute(br.subs); }

// Restricts the branch to phi = 0; false when that is impossible.
bool impose(Branch& br, const Scalar& phi_in, const std::vector<Symbol>& prefer) {
  Scalar phi = apply(br, phi_in);
  if (phi.is_zero()) return true;
  if (phi.is_rational()) return false;
  Poly num = phi.numerator();
  std::vector<Symbol> order = prefer;
  for (Symbol s : num.symbols()) {
    if (std::find(order.begin(), order.end(), s) == order.end()) order.push_back(s);
  }
  for (Symbol s : order) {
    if (num.degree_in(s) != 1) continue;
    auto coeffs = num.coefficients_in(s);
    Scalar root = -Scalar(coeffs[0]) / Scalar(coeffs[1]);
    br.constraints.push_back(phi);
    for (auto& [k, v] : br.subs) v = v.substitute(s, root);
    br.subs[s] = root;
    return true;
  }
  throw Error(ErrorKind::InvalidArgument, "nonlinear parameter constraint " + phi.to_string());
}

bool nonzero(const Branch& br, const Scalar& s) { return !apply(br, s).is_zero(); }

std::vector<Scalar> roots_in(const Scalar& poly, Symbol unknown) {
  std::vector<Scalar> coeffs;
  Poly num = poly.numerator();
  for (const auto& c : num.coefficients_in(unknown)) coeffs.push_back(Scalar::fraction(c, poly.denominator()));
  RootExtraction r = rational_roots(coeffs);
  if (!r.certified) throw Error(ErrorKind::InvalidArgument, "unresolved symbolic root in the case analysis");
  return r.roots;
}

}  // namespace

std::vector<TransformSolution> enumerate_transform_solutions(const Scalar& b1, const Scalar& d1, const Scalar& b2,
                                                             const Scalar& d2) {
  for (const Scalar* p : {&b1, &d1, &b2, &d2}) {
    if (p->is_zero()) throw Error(ErrorKind::DegenerateParameters, "coefficients must be nonzero");
  }
  Symbol es("@e"), gs("@G");
  Scalar e = Scalar::symbol("@e");
  Scalar g = Scalar::symbol("@G");
  Scalar gap = b1 - d1;
  // f = -G (b1 - d1)
  OrthoSystem sys = ortho_coefficient_system(b1, d1, b2, d2, e, -g * gap);
  const OrthoDefinitions& k = sys.defs;

  std::vector<Symbol> prefer;
  for (const Scalar* p : {&b2, &d2}) {
    for (Symbol s : p->symbols()) prefer.push_back(s);
  }

  std::vector<TransformSolution> out;
  std::set<std::string> seen;
  // u^2 coefficient AC and v^2 coefficient BD, with e != 0
  for (const Scalar* first : {&k.A, &k.C}) {
    for (const Scalar* second : {&k.B, &k.D}) {
      Branch br;
      if (!impose(br, *first / e, prefer) || !impose(br, *second / e, prefer)) continue;
      if (!nonzero(br, b1 - d1) || !nonzero(br, b2 - d2)) continue;
      if (!nonzero(br, b1) || !nonzero(br, d1) || !nonzero(br, b2) || !nonzero(br, d2)) continue;
      MultiPoly poly = sys.poly.map_coefficients([&](const Scalar& c) { return apply(br, c); });
      Scalar uv = poly.coefficient({1, 1});
      std::vector<Scalar> es_values = uv.is_zero() ? std::vector<Scalar>{} : roots_in(uv, es);
      if (uv.is_zero()) throw Error(ErrorKind::InvalidArgument, "the uv coefficient does not determine e");
      for (const auto& ev : es_values) {
        if (ev.is_zero()) continue;
        std::vector<Scalar> rest;
        for (const Exponents& m : {Exponents{1, 0}, Exponents{0, 1}, Exponents{0, 0}, Exponents{2, 0}, Exponents{0, 2}}) {
          Scalar c = poly.coefficient(m).substitute(es, ev);
          if (!c.is_zero()) rest.push_back(c);
        }
        std::vector<Scalar> gvalues;
        if (rest.empty()) throw Error(ErrorKind::InvalidArgument, "G is not determined");
        gvalues = rest[0].contains(gs) ? roots_in(rest[0], gs) : std::vector<Scalar>{};
        for (const auto& gv : gvalues) {
          bool ok = true;
          for (const auto& c : rest) ok = ok && c.substitute(gs, gv).is_zero();
          if (!ok) continue;
          Scalar nb1 = apply(br, b1), nd1 = apply(br, d1), nb2 = apply(br, b2), nd2 = apply(br, d2);
          TransformSolution sol;
          if (nb2 == nb1 && nd2 == nd1) {
            sol.tag = TransformSolution::Case::Direct;
          } else if (nb2 == nd1 && nd2 == nb1) {
            sol.tag = TransformSolution::Case::Swapped;
          } else {
            throw Error(ErrorKind::InvalidArgument, "internal: unclassified transform solution");
          }
          sol.e = ev;
          sol.f = -gv * apply(br, gap);
          sol.constraints = br.constraints;
          std::string key = std::string(case_name(sol.tag)) + sol.e.to_string() + sol.f.to_string();
          for (const auto& c : sol.constraints) key += "|" + c.to_string();
          if (seen.insert(key).second) out.push_back(sol);
        }
      }
    }
  }
  std::stable_sort(out.begin(), out.end(), [](const auto& l, const auto& r) { return l.tag < r.tag; });
  return out;
}

Point2 varma_solution(double a, double b, double c, double alpha, double beta, double t) {
  if (b == 0.0 || a == 0.0 || c == 0.0) throw Error(ErrorKind::DegenerateParameters, "a, b, c must be nonzero");
  if (alpha == 0.0) return {0.0, 0.0};
  double z = alpha * std::exp(b * t);
  double w = (z - beta) / b;
  double ew = std::exp(w);
  double gap = 1.0 - ew;
  if (std::abs(gap) < 1e-12 * std::max(1.0, ew)) throw Error(ErrorKind::PoleEncountered, "pole at t = " + std::to_string(t));
  Point2 p{z / (c * gap), z * ew / (a * gap)};
  if (!std::isfinite(p.x) || !std::isfinite(p.y)) throw Error(ErrorKind::NonFiniteState, "overflow in closed form");
  return p;
}

Point2 varma_solution(const LVSystem& sys, double alpha, double beta, double t) {
  if (sys.variant != LVSystem::Variant::Classical || sys.b != sys.d) {
    throw Error(ErrorKind::InvalidArgument, "the closed form needs the classical system with b = d");
  }
  for (const Scalar* p : {&sys.a, &sys.b, &sys.c}) {
    if (!p->is_rational()) throw Error(ErrorKind::InvalidArgument, "numeric coefficients required");
  }
  return varma_solution(sys.a.to_double(), sys.b.to_double(), sys.c.to_double(), alpha, beta, t);
}

Point2 varma_residual(double a, double b, double c, double alpha, double beta, double t, double h) {
  Point2 p = varma_solution(a, b, c, alpha, beta, t);
  Point2 plus = varma_solution(a, b, c, alpha, beta, t + h);
  Point2 minus = varma_solution(a, b, c, alpha, beta, t - h);
  double xp = (plus.x - minus.x) / (2 * h);
  double yp = (plus.y - minus.y) / (2 * h);
  return {std::abs(xp - p.x * (a * p.y + b)), std::abs(yp - p.y * (c * p.x + b))};
}

}  // namespace invcurve
