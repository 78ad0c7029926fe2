#pragma once

#include <gmpxx.h>

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "invcurve/algebra/ratfunc.hpp"
#include "invcurve/error.hpp"
#include "invcurve/vectorfield/vectorfield.hpp"

namespace invcurve::dsl {

class DslError : public Error {
 public:
  DslError(ErrorKind kind, int line, int column, const std::string& message);
  int line() const { return line_; }
  int column() const { return column_; }

 private:
  int line_;
  int column_;
};

struct Expr;
using ExprPtr = std::shared_ptr<const Expr>;

struct Expr {
  enum class Kind { Number, Name, Neg, Add, Sub, Mul, Div, Pow };
  Kind kind;
  std::string text;  // digits or identifier
  ExprPtr lhs;
  ExprPtr rhs;
  int exponent = 0;
};

struct ParamDecl {
  std::string name;
  std::optional<mpq_class> value;
};

struct DiffParamDecl {
  std::string name;
  ExprPtr derivative;
};

struct Equation {
  std::string variable;
  ExprPtr rhs;
};

struct SystemSpec {
  std::vector<std::string> variables;
  std::vector<ParamDecl> params;
  std::vector<DiffParamDecl> diff_params;
  std::vector<Equation> equations;  // in declaration order of the variables
};

SystemSpec parse_system(std::string_view text);
ExprPtr parse_expression(std::string_view text);

std::string print_expression(const ExprPtr& e);
std::string print_system(const SystemSpec& spec);

bool same_expression(const ExprPtr& a, const ExprPtr& b);
bool same_system(const SystemSpec& a, const SystemSpec& b);

// names in vars become geometric variables, every other name a parameter symbol
RatFunc to_ratfunc(const ExprPtr& e, const std::vector<std::string>& vars);
RatFunc parse_ratfunc(std::string_view text, const std::vector<std::string>& vars);
MultiPoly parse_polynomial(std::string_view text, const std::vector<std::string>& vars);
Scalar parse_scalar(std::string_view text);

// declared parameter values, then overrides, are substituted; the rest stay symbolic
VectorField to_vector_field(const SystemSpec& spec, const std::map<std::string, mpq_class>& overrides = {});

}  // namespace invcurve::dsl
