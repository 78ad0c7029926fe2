#include <gtest/gtest.h>

#include <chrono>
#include <set>

#include "invcurve/darboux/darboux.hpp"
#include "invcurve/error.hpp"
#include "oracles/brute_force_darboux.hpp"
#include "support.hpp"

using namespace testing_support;

namespace {

std::vector<std::string> curve_strings(const DarbouxReport& r) {
  std::vector<std::string> out;
  for (const auto& c : r.curves) out.push_back(c.poly.to_string());
  return out;
}

std::set<std::string> as_set(const std::vector<MultiPoly>& polys) {
  std::set<std::string> out;
  for (const auto& p : polys) out.insert(p.primitive().to_string());
  return out;
}

std::set<std::string> as_set(const DarbouxReport& r) {
  std::set<std::string> out;
  for (const auto& c : r.curves) out.insert(c.poly.to_string());
  return out;
}

bool lists_condition(const DarbouxReport& r, const std::string& text) {
  Scalar wanted = S(text);
  for (const auto& c : r.branching_conditions) {
    if (c == wanted || c == -wanted) return true;
  }
  return false;
}

void expect_sound(const VectorField& s, const DarbouxReport& r) {
  for (const auto& c : r.curves) {
    EXPECT_EQ(c.cofactor * c.poly, lie_derivative(s, c.poly)) << c.poly.to_string();
    EXPECT_LE(c.cofactor.total_degree() + 1, std::max(s.degree(), 1u));
  }
  for (std::size_t i = 0; i < r.curves.size(); ++i) {
    for (std::size_t j = 0; j < r.curves.size(); ++j) {
      if (i != j) EXPECT_FALSE(are_associates(r.curves[i].poly, r.curves[j].poly));
      for (std::size_t k = 0; k < r.curves.size(); ++k) {
        if (k == i || k == j) continue;
        EXPECT_FALSE(are_associates(r.curves[k].poly, r.curves[i].poly * r.curves[j].poly));
      }
    }
  }
}

}  // namespace

TEST(Darboux, NumericLotkaVolterraHasOnlyAxes) {
  DarbouxReport r = darboux_search(lv("1", "2", "1", "3"), 3);
  ASSERT_EQ(curve_strings(r), (std::vector<std::string>{"X", "Y"}));
  EXPECT_EQ(r.curves[0].cofactor, P("Y + 2"));
  EXPECT_EQ(r.curves[1].cofactor, P("X + 3"));
  EXPECT_EQ(r.completeness, Completeness::CompleteUpToBound);
  EXPECT_EQ(r.degree_bound, 3u);
}

TEST(Darboux, EqualRatesAddDiagonal) {
  DarbouxReport r = darboux_search(lv("1", "b", "1", "b"), 2);
  ASSERT_EQ(curve_strings(r), (std::vector<std::string>{"X", "X - Y", "Y"}));
  EXPECT_EQ(r.curves[1].cofactor, P("b"));
}

TEST(Darboux, TwoDimensionalVariantHasOnlyAxes) {
  DarbouxReport r = darboux_search(lv2d("1", "1", "1", "1"), 3);
  EXPECT_EQ(curve_strings(r), (std::vector<std::string>{"X", "Y"}));
}

TEST(Darboux, GenericSymbolicRatesDegreeFour) {
  auto start = std::chrono::steady_clock::now();
  DarbouxReport r = darboux_search(lv("1", "b", "1", "d"), 4);
  double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  EXPECT_EQ(curve_strings(r), (std::vector<std::string>{"X", "Y"}));
  EXPECT_TRUE(lists_condition(r, "b - d"));
  EXPECT_LT(seconds, 60.0);
  expect_sound(lv("1", "b", "1", "d"), r);
}

TEST(Darboux, SpecializingTheBranchingConditionRecoversDiagonal) {
  DarbouxReport generic = darboux_search(lv("1", "b", "1", "d"), 3);
  ASSERT_TRUE(lists_condition(generic, "b - d"));
  VectorField special = lv("1", "b", "1", "d").substitute_parameters({{Symbol("d"), S("b")}});
  DarbouxReport r = darboux_search(special, 3);
  EXPECT_EQ(curve_strings(r), (std::vector<std::string>{"X", "X - Y", "Y"}));
}

TEST(Darboux, GeneralScalingWithEqualRates) {
  DarbouxReport r = darboux_search(lv("a", "b", "c", "b"), 3);
  std::set<std::string> got = as_set(r);
  EXPECT_EQ(got.size(), 3u);
  EXPECT_TRUE(got.count("X") && got.count("Y"));
  bool found = false;
  for (const auto& c : r.curves) {
    if (are_associates(c.poly, P("c*X - a*Y"))) {
      found = true;
      EXPECT_EQ(c.cofactor, P("b"));
    }
  }
  EXPECT_TRUE(found);
}

TEST(Darboux, NumericEqualRatesDegreeFour) {
  DarbouxReport r = darboux_search(lv("2", "5", "3", "5"), 4);
  EXPECT_EQ(curve_strings(r), (std::vector<std::string>{"3*X - 2*Y", "X", "Y"}));
}

TEST(Darboux, PolynomialFirstIntegralIsAPencil) {
  DarbouxReport r = darboux_search(field("Y", "-X"), 2);
  EXPECT_EQ(r.completeness, Completeness::Partial);
  ASSERT_FALSE(r.pencils.empty());
  EXPECT_TRUE(r.pencils[0].cofactor.is_zero());
}

TEST(Darboux, LinearFieldLines) {
  DarbouxReport r = darboux_search(field("X", "2*Y"), 2);
  EXPECT_EQ(curve_strings(r), (std::vector<std::string>{"X", "Y"}));
}

TEST(Darboux, RejectsCubicFields) {
  try {
    darboux_search(field("X^3", "Y"), 2);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::UnsupportedDegree);
  }
}

TEST(Darboux, RejectsRationalFields) {
  try {
    darboux_search(field("1/X", "Y"), 2);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::NotPolynomialField);
  }
}

TEST(Darboux, ClearingDenominatorsKeepsOrbits) {
  VectorField s = clear_denominators(field("1/X", "Y/(X*Y + 1)"));
  ASSERT_TRUE(s.is_polynomial());
  EXPECT_EQ(s.polynomial_component(0), P("X*Y + 1"));
  EXPECT_EQ(s.polynomial_component(1), P("X*Y"));
}

TEST(Darboux, DiffParamsAreCaveated) {
  VectorField s = field("X*(Y + 1)", "Y*(X + 1)", {DiffParam{"z", DiffParam::Mode::Log, S("1")}});
  DarbouxReport r = darboux_search(s, 1);
  EXPECT_FALSE(r.caveats.empty());
}

TEST(Darboux, AgreesWithBruteForceOnLotkaVolterra) {
  const char* cases[][4] = {{"1", "2", "1", "3"}, {"1", "2", "1", "2"}, {"2", "-1", "3", "-1"},
                            {"1", "1", "-1", "1"}, {"1", "2", "1", "1"}, {"3", "1", "1", "-2"}};
  for (const auto& c : cases) {
    VectorField s = lv(c[0], c[1], c[2], c[3]);
    auto expected = oracles::brute_force_invariant_curves(s.polynomial_component(0), s.polynomial_component(1), 3);
    EXPECT_EQ(as_set(darboux_search(s, 3)), as_set(expected)) << s.to_string();
  }
}

TEST(Darboux, AgreesWithBruteForceOnPlantedLines) {
  Random rng(21);
  int compared = 0;
  for (int i = 0; i < 40; ++i) {
    MultiPoly x = P("X"), y = P("Y");
    Scalar al(rng.integer(-2, 2)), be(rng.integer(-2, 2)), ga(rng.integer(-2, 2));
    if (al.is_zero() && be.is_zero()) continue;
    MultiPoly l = x.scaled(al) + y.scaled(be) + MultiPoly::constant({"X", "Y"}, ga);
    MultiPoly u1 = rng.poly({"X", "Y"}, 1, 2, false), u2 = rng.poly({"X", "Y"}, 1, 2, false);
    MultiPoly w = rng.poly({"X", "Y"}, 2, 3, false);
    MultiPoly p = l * u1 + w.scaled(be);
    MultiPoly q = l * u2 - w.scaled(al);
    if (p.total_degree() > 2 || q.total_degree() > 2 || (p.is_zero() && q.is_zero())) continue;
    std::vector<MultiPoly> expected;
    try {
      expected = oracles::brute_force_invariant_curves(p, q, 2);
    } catch (const oracles::OracleUnsupported&) {
      continue;
    }
    VectorField s({"X", "Y"}, {RatFunc(p), RatFunc(q)});
    DarbouxReport r = darboux_search(s, 2);
    if (!r.pencils.empty()) continue;
    EXPECT_EQ(as_set(r), as_set(expected)) << s.to_string();
    expect_sound(s, r);
    ++compared;
  }
  EXPECT_GE(compared, 20);
}

TEST(Darboux, AgreesWithBruteForceOnRandomQuadratics) {
  Random rng(22);
  int compared = 0;
  for (int i = 0; i < 30; ++i) {
    MultiPoly p = rng.poly({"X", "Y"}, 2, 3, false);
    MultiPoly q = rng.poly({"X", "Y"}, 2, 3, false);
    if (p.is_zero() || q.is_zero()) continue;
    std::vector<MultiPoly> expected;
    try {
      expected = oracles::brute_force_invariant_curves(p, q, 3);
    } catch (const oracles::OracleUnsupported&) {
      continue;
    }
    VectorField s({"X", "Y"}, {RatFunc(p), RatFunc(q)});
    DarbouxReport r = darboux_search(s, 3);
    if (!r.pencils.empty()) continue;
    EXPECT_EQ(as_set(r), as_set(expected)) << s.to_string();
    ++compared;
  }
  EXPECT_GE(compared, 15);
}

TEST(InvariantFamily, UnitScaling) {
  InvariantCurve c = invariant_family_b_eq_d(S("1"), S("b"), S("1"));
  EXPECT_EQ(c.poly, P("X - Y - z"));
  EXPECT_EQ(c.cofactor, P("b"));
  EXPECT_EQ(c.field.to_string(), "DIFF_PARAM(z)");
}

TEST(InvariantFamily, ScaledMember) {
  InvariantCurve c = invariant_family_b_eq_d(S("2"), S("5"), S("3"));
  EXPECT_EQ(c.poly, P("3*X - 2*Y - z"));
  EXPECT_EQ(c.cofactor, P("5"));
}

TEST(InvariantFamily, ZeroSolutionGivesConstantCurve) {
  InvariantCurve c = invariant_family_b_eq_d(S("a"), S("b"), S("c"));
  MultiPoly at_zero = c.poly.substitute_parameters({{Symbol("z"), Scalar(0)}});
  EXPECT_EQ(at_zero, P("c*X - a*Y"));
  EXPECT_EQ(is_invariant(lv("a", "b", "c", "b"), at_zero), P("b"));
}

TEST(InvariantFamily, DegenerateRejected) {
  try {
    invariant_family_b_eq_d(S("0"), S("1"), S("1"));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::DegenerateParameters);
  }
}
