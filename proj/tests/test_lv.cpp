#include <gtest/gtest.h>

#include <cmath>

#include "invcurve/error.hpp"
#include "invcurve/lv/lv.hpp"
#include "support.hpp"

using namespace testing_support;

namespace {

const std::vector<std::string> XY{"X", "Y"};
const std::vector<std::string> UV{"u", "v"};

LVSystem make(const std::string& a, const std::string& b, const std::string& c, const std::string& d) {
  return LVSystem::make(S(a), S(b), S(c), S(d));
}

bool has_kind(const std::function<void()>& f, ErrorKind kind) {
  try {
    f();
  } catch (const Error& e) {
    return e.kind() == kind;
  }
  return false;
}

void expect_pushforward(const LVSystem& sys) {
  ScaleTransform t = lv_scale_transform(sys);
  VectorField source = sys.field();
  VectorField target = t.target.field();
  std::map<std::string, RatFunc> sub{{"X", RatFunc(t.map.at("X"))}, {"Y", RatFunc(t.map.at("Y"))}};
  EXPECT_EQ(lie_derivative(source, RatFunc(t.map.at("X"))), target.components()[0].substitute(sub));
  EXPECT_EQ(lie_derivative(source, RatFunc(t.map.at("Y"))), target.components()[1].substitute(sub));
}

std::string tags(const std::vector<TransformSolution>& sols) {
  std::string out;
  for (const auto& s : sols) out += std::string(case_name(s.tag)) + ";";
  return out;
}

}  // namespace

TEST(LV, RejectsZeroCoefficients) {
  EXPECT_TRUE(has_kind([] { make("0", "1", "1", "1"); }, ErrorKind::DegenerateParameters));
  EXPECT_TRUE(has_kind([] { make("1", "1", "1", "0"); }, ErrorKind::DegenerateParameters));
  EXPECT_NO_THROW(make("a", "b", "c", "d"));
}

TEST(LV, FieldMatchesDefinition) {
  EXPECT_EQ(make("a", "b", "c", "d").field().components()[1], R("Y*(c*X + d)"));
  LVSystem two = LVSystem::make(S("a"), S("b"), S("c"), S("d"), LVSystem::Variant::TwoD);
  EXPECT_EQ(two.field().components()[1], R("Y*(c*X + d*Y)"));
}

TEST(LV, ScaleTransformExample) {
  ScaleTransform t = lv_scale_transform(make("2", "3", "5", "7"));
  EXPECT_EQ(t.target.to_string(), "LV_{1,3,1,7}");
  EXPECT_EQ(t.map.at("X"), P("5*X"));
  EXPECT_EQ(t.map.at("Y"), P("2*Y"));
}

TEST(LV, ScaleTransformFixesNormalized) {
  ScaleTransform t = lv_scale_transform(make("1", "b", "1", "d"));
  EXPECT_EQ(t.target.to_string(), "LV_{1,b,1,d}");
  EXPECT_EQ(t.map.at("X"), P("X"));
  EXPECT_EQ(t.map.at("Y"), P("Y"));
}

TEST(LV, ScaleTransformPushesFieldForward) {
  expect_pushforward(make("2", "3", "5", "7"));
  expect_pushforward(make("a", "b", "c", "d"));
  ScaleTransform t = lv_scale_transform(make("a", "b", "c", "d"));
  EXPECT_EQ(lie_derivative(t.target.field(), P("X")), P("X*(Y + b)"));
}

TEST(LV, ScaleTransformRequiresClassical) {
  LVSystem two = LVSystem::make(S("1"), S("1"), S("1"), S("1"), LVSystem::Variant::TwoD);
  EXPECT_THROW(lv_scale_transform(two), Error);
}

TEST(LV, SwapTransform) {
  EXPECT_EQ(lv_swap_transform(make("1", "3", "1", "7")).to_string(), "LV_{1,7,1,3}");
  LVSystem sym = make("1", "b", "1", "d");
  EXPECT_EQ(lv_swap_transform(lv_swap_transform(sym)).to_string(), sym.to_string());
  EXPECT_EQ(lv_swap_transform(make("1", "b", "1", "b")).to_string(), "LV_{1,b,1,b}");
  EXPECT_TRUE(has_kind([] { lv_swap_transform(make("2", "3", "1", "7")); }, ErrorKind::NotNormalized));
}

TEST(LV, SwapConjugatesFields) {
  VectorField s = make("1", "b", "1", "d").field();
  VectorField t = lv_swap_transform(make("1", "b", "1", "d")).field();
  std::map<std::string, RatFunc> flip{{"X", R("Y")}, {"Y", R("X")}};
  EXPECT_EQ(s.components()[0].substitute(flip), t.components()[1]);
  EXPECT_EQ(s.components()[1].substitute(flip), t.components()[0]);
}

TEST(Brestovski, Shape) {
  BrestovskiSystem sys = brestovski_reduce(S("2"), S("3"));
  const auto& zv = BrestovskiSystem::variables();
  EXPECT_EQ(sys.f, P("Z", zv));
  ASSERT_EQ(sys.terms.size(), 2u);
  EXPECT_EQ(sys.terms[0].first, S("2"));
  EXPECT_EQ(sys.terms[0].second, P("Zp - 2*Z", zv));
  EXPECT_EQ(sys.terms[1].first, S("-3"));
  EXPECT_EQ(sys.terms[1].second, P("Zp - 3*Z", zv));
  EXPECT_EQ(sys.recover_x, R("(Zp - 3*Z)/(2 - 3)", zv));
  EXPECT_EQ(sys.recover_y, R("(Zp - 2*Z)/(2 - 3)", zv));
}

TEST(Brestovski, RejectsEqualRates) {
  EXPECT_TRUE(has_kind([] { brestovski_reduce(S("b"), S("b")); }, ErrorKind::DegenerateParameters));
  EXPECT_TRUE(has_kind([] { brestovski_reduce(S("2"), S("2")); }, ErrorKind::DegenerateParameters));
}

TEST(Brestovski, DifferenceDerivative) {
  VectorField s = make("1", "b", "1", "d").field();
  EXPECT_EQ(lie_derivative(s, P("X - Y")), P("b*X - d*Y"));
}

TEST(Brestovski, RoundTrip) {
  for (auto [b, d] : {std::pair<std::string, std::string>{"2", "3"}, {"b", "d"}}) {
    VectorField s = make("1", b, "1", d).field();
    BrestovskiSystem sys = brestovski_reduce(S(b), S(d));
    std::map<std::string, RatFunc> back{{"X", sys.recover_x}, {"Y", sys.recover_y}};
    RatFunc z1 = lie_derivative(s, R("X - Y"));
    RatFunc z2 = lie_derivative(s, z1);
    const auto& zv = BrestovskiSystem::variables();
    EXPECT_EQ(R("X - Y").substitute(back), R("Z", zv));
    EXPECT_EQ(z1.substitute(back), R("Zp", zv));
    EXPECT_EQ(z2.substitute(back), sys.phase_field().components()[1]);
  }
}

TEST(Brestovski, PhaseFieldSatisfiesEquation) {
  BrestovskiSystem sys = brestovski_reduce(S("b"), S("d"));
  VectorField s = sys.phase_field();
  RatFunc rhs(BrestovskiSystem::variables());
  for (const auto& [c, g] : sys.terms) rhs += lie_derivative(s, RatFunc(g)).scaled(c) / RatFunc(g);
  EXPECT_EQ(lie_derivative(s, RatFunc(sys.f)), rhs);
}

TEST(Brestovski, OmegaInvariantNumeric) {
  BrestovskiSystem sys = brestovski_reduce(S("2"), S("3"));
  DForm w = omega1_form(sys);
  EXPECT_FALSE(w.is_zero());
  EXPECT_TRUE(lie_derivative_form(sys.phase_field(), w).is_zero());
}

TEST(Brestovski, OmegaInvariantSymbolic) {
  BrestovskiSystem sys = brestovski_reduce(S("b"), S("d"));
  DForm w = omega1_form(sys);
  EXPECT_FALSE(w.is_zero());
  EXPECT_TRUE(lie_derivative_form(sys.phase_field(), w).is_zero());
}

TEST(Brestovski, OmegaWithoutTermsVanishes) {
  BrestovskiSystem sys = brestovski_reduce(S("2"), S("3"));
  sys.terms.clear();
  EXPECT_TRUE(omega1_form(sys).is_zero());
}

TEST(Ortho, MatchesClosedFormCoefficients) {
  Scalar b1 = S("b1"), d1 = S("d1"), b2 = S("b2"), d2 = S("d2");
  OrthoSystem sys = ortho_coefficient_system(b1, d1, b2, d2, S("e"), S("f"));
  EXPECT_EQ(sys.poly, ortho_coefficient_display(sys.defs, b1, d1, b2, d2));
  EXPECT_EQ(sys.poly.coefficient({2, 0}), sys.defs.A * sys.defs.C);
  EXPECT_EQ(sys.defs.A, S("(b2 - d1)/(b1 - d1)*e"));
  EXPECT_EQ(sys.defs.G, S("-f/(b1 - d1)"));
}

TEST(Ortho, MatchesClosedFormOnRandomValues) {
  Random rng(11);
  for (int i = 0; i < 20; ++i) {
    Scalar b1 = rng.small_rational(), d1 = rng.small_rational(), b2 = rng.small_rational(), d2 = rng.small_rational();
    if ((b1 - d1).is_zero() || (b2 - d2).is_zero()) continue;
    OrthoSystem sys = ortho_coefficient_system(b1, d1, b2, d2, rng.scalar(), rng.scalar());
    EXPECT_EQ(sys.poly, ortho_coefficient_display(sys.defs, b1, d1, b2, d2));
  }
}

TEST(Ortho, IdentityParametersVanish) {
  OrthoSystem sys = ortho_coefficient_system(S("b1"), S("d1"), S("b1"), S("d1"), S("1"), S("0"));
  EXPECT_TRUE(sys.poly.is_zero());
  OrthoSystem swapped = ortho_coefficient_system(S("b1"), S("d1"), S("d1"), S("b1"), S("-1"), S("0"));
  EXPECT_TRUE(swapped.poly.is_zero());
}

TEST(Ortho, DegenerateParameters) {
  EXPECT_TRUE(has_kind([] { ortho_coefficient_system(S("2"), S("2"), S("1"), S("3"), S("e"), S("f")); },
                       ErrorKind::DegenerateParameters));
  EXPECT_TRUE(has_kind([] { enumerate_transform_solutions(S("2"), S("3"), S("4"), S("4")); },
                       ErrorKind::DegenerateParameters));
  EXPECT_TRUE(has_kind([] { enumerate_transform_solutions(S("0"), S("3"), S("4"), S("5")); },
                       ErrorKind::DegenerateParameters));
}

TEST(Ortho, EnumerateDirect) {
  auto sols = enumerate_transform_solutions(S("2"), S("3"), S("2"), S("3"));
  ASSERT_EQ(sols.size(), 1u);
  EXPECT_EQ(sols[0].tag, TransformSolution::Case::Direct);
  EXPECT_EQ(sols[0].e, S("1"));
  EXPECT_EQ(sols[0].f, S("0"));
  EXPECT_TRUE(sols[0].constraints.empty());
}

TEST(Ortho, EnumerateSwapped) {
  auto sols = enumerate_transform_solutions(S("2"), S("3"), S("3"), S("2"));
  ASSERT_EQ(sols.size(), 1u);
  EXPECT_EQ(sols[0].tag, TransformSolution::Case::Swapped);
  EXPECT_EQ(sols[0].e, S("-1"));
  EXPECT_EQ(sols[0].f, S("0"));
}

TEST(Ortho, EnumerateNone) {
  EXPECT_TRUE(enumerate_transform_solutions(S("2"), S("3"), S("4"), S("5")).empty());
  EXPECT_TRUE(enumerate_transform_solutions(S("2"), S("3"), S("2"), S("5")).empty());
  EXPECT_TRUE(enumerate_transform_solutions(S("2"), S("3"), S("3"), S("5")).empty());
}

TEST(Ortho, SolutionsZeroTheSystem) {
  for (auto v : {std::vector<int>{2, 3, 2, 3}, {2, 3, 3, 2}, {-1, 4, 4, -1}, {5, 7, 5, 7}}) {
    auto sols = enumerate_transform_solutions(v[0], v[1], v[2], v[3]);
    ASSERT_EQ(sols.size(), 1u);
    EXPECT_TRUE(ortho_coefficient_system(v[0], v[1], v[2], v[3], sols[0].e, sols[0].f).poly.is_zero());
  }
}

TEST(Ortho, SymbolicCaseTree) {
  auto sols = enumerate_transform_solutions(S("b1"), S("d1"), S("b2"), S("d2"));
  EXPECT_EQ(tags(sols), "DIRECT;SWAPPED;");
  for (const auto& s : sols) {
    EXPECT_EQ(s.e, s.tag == TransformSolution::Case::Direct ? S("1") : S("-1"));
    EXPECT_EQ(s.f, S("0"));
    EXPECT_EQ(s.constraints.size(), 2u);
  }
}

TEST(Ortho, SymmetricUnderSwappingPairs) {
  Random rng(5);
  int compared = 0;
  for (int i = 0; i < 200 && compared < 30; ++i) {
    int b1 = rng.integer(-3, 3), d1 = rng.integer(-3, 3), b2 = rng.integer(-3, 3), d2 = rng.integer(-3, 3);
    if (!b1 || !d1 || !b2 || !d2 || b1 == d1 || b2 == d2) continue;
    auto fwd = enumerate_transform_solutions(b1, d1, b2, d2);
    auto back = enumerate_transform_solutions(b2, d2, b1, d1);
    EXPECT_EQ(tags(fwd), tags(back));
    bool direct = b1 == b2 && d1 == d2;
    bool swapped = b1 == d2 && d1 == b2;
    EXPECT_EQ(tags(fwd), std::string(direct ? "DIRECT;" : "") + (swapped ? "SWAPPED;" : ""));
    ++compared;
  }
  EXPECT_GE(compared, 30);
}

TEST(Varma, ZeroAlpha) {
  for (double t : {-1.0, 0.0, 2.5}) {
    Point2 p = varma_solution(1, 1, 1, 0, 2, t);
    EXPECT_EQ(p.x, 0.0);
    EXPECT_EQ(p.y, 0.0);
  }
}

TEST(Varma, Pole) {
  EXPECT_TRUE(has_kind([] { varma_solution(1, 1, 1, 1, 1, 0); }, ErrorKind::PoleEncountered));
}

TEST(Varma, ResidualsAlongSamples) {
  for (int i = 0; i < 20; ++i) {
    double t = -2.0 + 0.1 * i;
    Point2 r = varma_residual(1, 1, 1, 1, 2, t);
    EXPECT_LT(r.x, 1e-6) << t;
    EXPECT_LT(r.y, 1e-6) << t;
  }
}

TEST(Varma, GeneralCoefficients) {
  double a = 2, b = 0.5, c = 3;
  for (double t : {-1.0, -0.3, 0.4}) {
    Point2 r = varma_residual(a, b, c, 1.5, 4, t);
    EXPECT_LT(r.x, 1e-6) << t;
    EXPECT_LT(r.y, 1e-6) << t;
    double h = 1e-5;
    auto g = [&](double s) {
      Point2 p = varma_solution(a, b, c, 1.5, 4, s);
      return c * p.x - a * p.y;
    };
    double derivative = (g(t + h) - g(t - h)) / (2 * h);
    EXPECT_LT(std::abs(derivative - b * g(t)), 1e-6);
  }
}

TEST(Varma, SystemOverload) {
  Point2 p = varma_solution(make("1", "1", "1", "1"), 1, 2, 0.3);
  Point2 q = varma_solution(1, 1, 1, 1, 2, 0.3);
  EXPECT_EQ(p.x, q.x);
  EXPECT_THROW(varma_solution(make("1", "1", "1", "2"), 1, 2, 0.3), Error);
}
