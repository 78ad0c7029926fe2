#pragma once

#include <optional>
#include <string>
#include <vector>

#include "invcurve/darboux/darboux.hpp"

namespace invcurve {

enum class Verdict { StronglyMinimalCertified, CriterionFails, Inconclusive };

const char* verdict_name(Verdict v);

struct MinimalityReport {
  Verdict verdict = Verdict::Inconclusive;
  std::optional<std::vector<Scalar>> witness;
  std::vector<std::vector<Scalar>> singular_points;
  DarbouxReport curves_checked;
  std::vector<std::string> caveats;
};

// Looks for a singular point on none of the invariant curves found up to max_degree.
MinimalityReport check_strong_minimality(const VectorField& s, unsigned max_degree);

}  // namespace invcurve
