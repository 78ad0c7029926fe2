#include "invcurve/algebra/planar_solve.hpp"

#include <algorithm>

#include "invcurve/algebra/roots.hpp"
#include "invcurve/error.hpp"

namespace invcurve {

namespace {

MultiPoly univariate_gcd(const std::vector<MultiPoly>& polys) {
  MultiPoly g;
  bool first = true;
  for (const auto& p : polys) {
    if (p.is_zero()) continue;
    g = first ? p.monic() : multivariate_gcd(g, p);
    first = false;
  }
  return g;
}

}  // namespace

PlanarSolutions solve_planar_system(const std::vector<MultiPoly>& equations,
                                    const std::string& x, const std::string& y) {
  std::vector<std::string> vars{x, y};
  std::vector<MultiPoly> eqs;
  for (const auto& e : equations) {
    if (!e.is_zero()) eqs.push_back(e.over(vars));
  }
  if (eqs.empty()) {
    throw Error(ErrorKind::PositiveDimensionalSingularLocus, "every equation vanishes identically");
  }
  PlanarSolutions out;
  for (const auto& e : eqs) {
    if (e.is_constant()) return out;
  }
  MultiPoly common = univariate_gcd(eqs);
  if (!common.is_constant()) {
    throw Error(ErrorKind::PositiveDimensionalSingularLocus,
                "equations share the factor " + common.primitive().to_string());
  }
  MultiPoly projection;
  bool have = false;
  if (eqs.size() == 1) {
    throw Error(ErrorKind::PositiveDimensionalSingularLocus,
                "a single equation " + eqs[0].to_string() + " defines a curve");
  }
  for (std::size_t i = 0; i < eqs.size(); ++i) {
    for (std::size_t j = i + 1; j < eqs.size(); ++j) {
      MultiPoly r = resultant(eqs[i], eqs[j], y);
      if (r.is_zero()) continue;
      projection = have ? multivariate_gcd(projection, r) : r;
      have = true;
    }
  }
  if (!have) {
    throw Error(ErrorKind::PositiveDimensionalSingularLocus, "all pairwise resultants vanish");
  }
  if (projection.is_constant()) return out;
  RootExtraction xs = rational_roots(projection, x);
  if (!xs.certified) out.certified = false;
  if (xs.residual_degree > 0) out.nonrational_discarded = true;
  for (const auto& x0 : xs.roots) {
    std::vector<MultiPoly> fibre;
    for (const auto& e : eqs) fibre.push_back(e.substitute(x, MultiPoly::constant(vars, x0)).over(vars));
    MultiPoly h = univariate_gcd(fibre);
    if (h.is_zero()) {
      throw Error(ErrorKind::PositiveDimensionalSingularLocus,
                  "the line " + x + " = " + x0.to_string() + " lies in the zero set");
    }
    if (h.is_constant()) continue;
    RootExtraction ys = rational_roots(h, y);
    if (!ys.certified) out.certified = false;
    if (ys.residual_degree > 0) out.nonrational_discarded = true;
    for (const auto& y0 : ys.roots) {
      std::map<std::string, Scalar> pt{{x, x0}, {y, y0}};
      bool ok = std::all_of(eqs.begin(), eqs.end(),
                            [&](const MultiPoly& e) { return e.evaluate(pt).is_zero(); });
      if (ok) out.points.emplace_back(x0, y0);
    }
  }
  return out;
}

}  // namespace invcurve
