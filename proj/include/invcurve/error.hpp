#pragma once

#include <stdexcept>
#include <string>

namespace invcurve {

enum class ErrorKind {
  DivisionByZero,
  ZeroDivisor,
  UnknownVariable,
  ZeroPolynomial,
  NotPolynomialField,
  PositiveDimensionalSingularLocus,
  UnsupportedDegree,
  DegenerateParameters,
  NotNormalized,
  PoleEncountered,
  NonFiniteState,
  SignChange,
  ArityZero,
  NonRepresentableCoefficient,
  InvalidArgument,
  SyntaxError,
  DuplicateEquation,
  UndeclaredName,
  MissingEquation,
};

const char* kind_name(ErrorKind kind);

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& message)
      : std::runtime_error(message), kind_(kind) {}

  ErrorKind kind() const { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace invcurve
