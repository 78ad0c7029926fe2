#include "invcurve/minimality/minimality.hpp"

namespace invcurve {

const char* verdict_name(Verdict v) {
  switch (v) {
    case Verdict::StronglyMinimalCertified:
      return "STRONGLY_MINIMAL_CERTIFIED";
    case Verdict::CriterionFails:
      return "CRITERION_FAILS";
    case Verdict::Inconclusive:
      return "INCONCLUSIVE";
  }
  return "INCONCLUSIVE";
}

namespace {

bool on_curve(const MultiPoly& curve, const std::vector<std::string>& vars, const std::vector<Scalar>& p) {
  std::map<std::string, Scalar> at;
  for (std::size_t i = 0; i < vars.size(); ++i) at.emplace(vars[i], p[i]);
  return curve.evaluate(at).is_zero();
}

bool has_parameters(const std::vector<std::vector<Scalar>>& points, const DarbouxReport& r) {
  for (const auto& p : points) {
    for (const auto& c : p) {
      if (!c.is_rational()) return true;
    }
  }
  for (const auto& c : r.curves) {
    for (const auto& [e, v] : c.poly.terms()) {
      if (!v.is_rational()) return true;
    }
  }
  return false;
}

}  // namespace

MinimalityReport check_strong_minimality(const VectorField& s, unsigned max_degree) {
  MinimalityReport report;
  SingularPointSet points = singular_points(s);
  report.singular_points = points.points;
  report.curves_checked = darboux_search(s, max_degree);
  const DarbouxReport& curves = report.curves_checked;
  const auto& vars = s.variables();

  report.caveats.push_back("DEGREE_BOUNDED: invariant curves were searched up to degree " + std::to_string(max_degree));
  report.caveats.push_back("SUFFICIENT_ONLY: the criterion is sufficient, a failure does not prove non-minimality");
  if (points.nonrational_discarded) {
    report.caveats.push_back("NONRATIONAL_POINTS_DISCARDED: singular points outside the coefficient field were not tested");
  }
  if (!points.certified) report.caveats.push_back("SINGULAR_POINTS_UNCERTIFIED: a symbolic factor was left unresolved");
  if (curves.completeness == Completeness::Partial) {
    report.caveats.push_back("SEARCH_PARTIAL: the invariant curve search is not complete up to the bound");
  }

  if (!curves.pencils.empty()) {
    report.caveats.push_back("PENCIL: a one-parameter family of invariant curves passes through every point");
    report.verdict = Verdict::CriterionFails;
    return report;
  }
  for (const auto& p : points.points) {
    bool covered = false;
    for (const auto& c : curves.curves) covered = covered || on_curve(c.poly, vars, p);
    if (covered) continue;
    report.witness = p;
    break;
  }
  if (report.witness) {
    bool complete = curves.completeness == Completeness::CompleteUpToBound && points.certified;
    report.verdict = complete ? Verdict::StronglyMinimalCertified : Verdict::Inconclusive;
    if (has_parameters(points.points, curves)) {
      report.caveats.push_back("GENERIC_PARAMETERS: valid off the branching conditions of the search");
    }
    return report;
  }
  if (points.points.empty()) {
    report.caveats.push_back("NO_SINGULAR_POINTS: no rational singular point to test");
    report.verdict = Verdict::Inconclusive;
    return report;
  }
  report.verdict = points.nonrational_discarded || !points.certified ? Verdict::Inconclusive : Verdict::CriterionFails;
  return report;
}

}  // namespace invcurve
