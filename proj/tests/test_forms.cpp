#include <gtest/gtest.h>

#include "invcurve/error.hpp"
#include "invcurve/forms/forms.hpp"
#include "support.hpp"

using namespace testing_support;

namespace {

const std::vector<std::string> XY{"X", "Y"};
const std::vector<std::string> XYZ{"X", "Y", "Z"};

DForm dx(const std::string& v, const std::vector<std::string>& vars = XY) { return DForm::differential(vars, v); }
DForm fn(const std::string& text, const std::vector<std::string>& vars = XY) {
  return DForm::function(vars, R(text, vars));
}

}  // namespace

TEST(Forms, DSquaredOnFunction) {
  EXPECT_TRUE(exterior_derivative(exterior_derivative(fn("X*Y^2"))).is_zero());
}

TEST(Forms, DifferentialOfLinearFunction) {
  EXPECT_EQ(exterior_derivative(fn("Y - X")), dx("Y") - dx("X"));
}

TEST(Forms, DerivativeOfOneForm) {
  EXPECT_EQ(exterior_derivative(dx("Y").scaled(R("X"))), wedge(dx("X"), dx("Y")));
}

TEST(Forms, WedgeAlternates) {
  EXPECT_TRUE(wedge(dx("X"), dx("X")).is_zero());
  EXPECT_EQ(wedge(dx("X"), dx("Y")), -wedge(dx("Y"), dx("X")));
}

TEST(Forms, WedgeBilinear) {
  EXPECT_EQ(wedge(dx("X").scaled(R("X")), dx("Y").scaled(R("Y"))), wedge(dx("X"), dx("Y")).scaled(R("X*Y")));
}

TEST(Forms, WedgeBeyondTopDegreeVanishes) {
  EXPECT_TRUE(wedge(wedge(dx("X"), dx("Y")), dx("X")).is_zero());
}

TEST(Forms, InteriorOfVolume) {
  VectorField s = lv("a", "b", "c", "d");
  DForm vol = wedge(dx("X"), dx("Y"));
  DForm expected = dx("Y").scaled(s.components()[0]) - dx("X").scaled(s.components()[1]);
  EXPECT_EQ(interior_product(s, vol), expected);
}

TEST(Forms, InteriorOfExactFormIsTotalDerivative) {
  VectorField s = field("Y", "-X + Y^2");
  MultiPoly f = P("X^3*Y - 2*Y^2 + X");
  EXPECT_EQ(interior_product(s, exterior_derivative(DForm::function(XY, RatFunc(f)))),
            DForm::function(XY, RatFunc(lie_derivative(s, f))));
}

TEST(Forms, InteriorOfLogDifferential) {
  VectorField s = field("Y", "-X + Y^2");
  RatFunc g = R("X^2 + Y + 3");
  RatFunc expected = lie_derivative(s, g) / g;
  EXPECT_EQ(interior_product(s, log_differential(XY, g)), DForm::function(XY, expected));
}

TEST(Forms, InteriorOfFunctionThrows) {
  try {
    interior_product(lv("1", "2", "1", "3"), fn("X"));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::ArityZero);
  }
}

TEST(Forms, InteriorOverDiffParamDirection) {
  VectorField s = field("X*(Y + b)", "Y*(X + b)", {DiffParam{"z", DiffParam::Mode::Log, S("b")}});
  std::vector<std::string> vars{"X", "Y", "z"};
  DForm w = DForm::differential(vars, "X") - DForm::differential(vars, "Y") - DForm::differential(vars, "z");
  EXPECT_EQ(interior_product(s, w), DForm::function(vars, R("b*(X - Y - z)", vars)));
}

TEST(Forms, FirstIntegralFormIsInvariant) {
  VectorField s = lv("1", "b", "1", "d");
  DForm w = dx("Y") - dx("X") + dx("Y").scaled(R("b/Y")) - dx("X").scaled(R("d/X"));
  EXPECT_TRUE(lie_derivative_form(s, w).is_zero());
}

TEST(Forms, FirstIntegralFailsWithSwappedRates) {
  VectorField s = lv("1", "b", "1", "d");
  DForm w = dx("Y") - dx("X") + dx("Y").scaled(R("d/Y")) - dx("X").scaled(R("b/X"));
  EXPECT_FALSE(lie_derivative_form(s, w).is_zero());
}

TEST(Forms, DSquaredVanishesOnRandomForms) {
  Random rng(31);
  for (unsigned arity = 0; arity <= 2; ++arity) {
    for (int i = 0; i < 15; ++i) {
      DForm w = random_form(rng, arity, XYZ);
      EXPECT_TRUE(exterior_derivative(exterior_derivative(w)).is_zero());
    }
  }
}

TEST(Forms, GradedLeibniz) {
  Random rng(32);
  for (int i = 0; i < 20; ++i) {
    unsigned k = static_cast<unsigned>(rng.integer(0, 2));
    DForm a = random_form(rng, k, XYZ);
    DForm b = random_form(rng, static_cast<unsigned>(rng.integer(0, 1)), XYZ);
    DForm lhs = exterior_derivative(wedge(a, b));
    DForm rhs = wedge(exterior_derivative(a), b);
    DForm tail = wedge(a, exterior_derivative(b));
    rhs = k % 2 == 0 ? rhs + tail : rhs - tail;
    EXPECT_EQ(lhs, rhs);
  }
}

TEST(Forms, InteriorIsAntiderivation) {
  Random rng(33);
  std::vector<std::string> vars = XYZ;
  for (int i = 0; i < 20; ++i) {
    VectorField s(vars, {RatFunc(rng.poly(vars, 2)), RatFunc(rng.poly(vars, 2)), RatFunc(rng.poly(vars, 1))});
    unsigned k = static_cast<unsigned>(rng.integer(1, 2));
    DForm a = random_form(rng, k, vars);
    DForm b = random_form(rng, 1, vars);
    if (a.is_zero() || b.is_zero()) continue;
    DForm rhs = wedge(interior_product(s, a), b);
    DForm tail = wedge(a, interior_product(s, b));
    rhs = k % 2 == 0 ? rhs + tail : rhs - tail;
    EXPECT_EQ(interior_product(s, wedge(a, b)), rhs);
  }
}

TEST(Forms, CartanAgreesOnFunctions) {
  Random rng(34);
  for (int i = 0; i < 40; ++i) {
    VectorField s(XY, {RatFunc(rng.poly(XY, 2)), RatFunc(rng.poly(XY, 2))});
    MultiPoly h = rng.poly(XY, 3);
    EXPECT_EQ(lie_derivative_form(s, DForm::function(XY, RatFunc(h))), DForm::function(XY, RatFunc(lie_derivative(s, h))));
  }
}

TEST(Rosenlicht, MergesCommensurableLogs) {
  LogCombination lc{XY, R("X"), {{S("2"), R("X + 1")}, {S("3"), R("Y")}}};
  LogCombination out = rosenlicht_normalize(lc, {});
  ASSERT_EQ(out.log_terms.size(), 1u);
  EXPECT_EQ(out.log_terms[0].coefficient, S("1"));
  EXPECT_EQ(out.log_terms[0].argument, R("(X + 1)^2*Y^3"));
  EXPECT_EQ(out.to_form(), lc.to_form());
}

TEST(Rosenlicht, FractionalCoefficients) {
  LogCombination lc{XY, R("0"), {{S("1/2"), R("X")}, {S("-1/3"), R("Y")}}};
  LogCombination out = rosenlicht_normalize(lc, {});
  ASSERT_EQ(out.log_terms.size(), 1u);
  EXPECT_EQ(out.log_terms[0].coefficient, S("1/6"));
  EXPECT_EQ(out.log_terms[0].argument, R("X^3/Y^2"));
  EXPECT_EQ(out.to_form(), lc.to_form());
}

TEST(Rosenlicht, EmptyStaysEmpty) {
  LogCombination lc{XY, R("X*Y"), {}};
  LogCombination out = rosenlicht_normalize(lc, {});
  EXPECT_TRUE(out.log_terms.empty());
  EXPECT_EQ(out.exact_part, R("X*Y"));
}

TEST(Rosenlicht, IndependentCoefficientsUnchanged) {
  LogCombination lc{XY, R("0"), {{S("1"), R("X")}, {S("r2"), R("Y")}}};
  LogCombination out = rosenlicht_normalize(lc, {"r2"});
  ASSERT_EQ(out.log_terms.size(), 2u);
  EXPECT_EQ(out.log_terms[0].coefficient, S("1"));
  EXPECT_EQ(out.log_terms[0].argument, R("X"));
  EXPECT_EQ(out.log_terms[1].coefficient, S("r2"));
  EXPECT_EQ(out.log_terms[1].argument, R("Y"));
}

TEST(Rosenlicht, MixedBasisDependence) {
  LogCombination lc{XY, R("Y"), {{S("1 + r2"), R("X")}, {S("2 + 2*r2"), R("Y")}, {S("r2"), R("X + Y")}}};
  LogCombination out = rosenlicht_normalize(lc, {"r2"});
  EXPECT_EQ(out.log_terms.size(), 2u);
  EXPECT_EQ(out.to_form(), lc.to_form());
}

TEST(Rosenlicht, OutsideBasisThrows) {
  LogCombination lc{XY, R("0"), {{S("b"), R("X")}}};
  try {
    rosenlicht_normalize(lc, {"r2"});
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::NonRepresentableCoefficient);
  }
}

TEST(Rosenlicht, ExpansionPreservedOnRandomInputs) {
  Random rng(35);
  for (int i = 0; i < 25; ++i) {
    LogCombination lc{XY, RatFunc(rng.poly(XY, 2)), {}};
    int n = rng.integer(1, 4);
    for (int k = 0; k < n; ++k) {
      Scalar c = Scalar(rng.small_rational()) + Scalar(rng.small_rational()) * Scalar::symbol("r2");
      lc.log_terms.push_back({c, RatFunc(rng.nonzero_poly(XY, 1, 2, false))});
    }
    LogCombination out = rosenlicht_normalize(lc, {"r2"});
    EXPECT_LE(out.log_terms.size(), 2u);
    EXPECT_EQ(out.to_form(), lc.to_form());
  }
}
