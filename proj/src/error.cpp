#include "invcurve/error.hpp"

namespace invcurve {

const char* kind_name(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::DivisionByZero: return "DivisionByZero";
    case ErrorKind::ZeroDivisor: return "ZeroDivisor";
    case ErrorKind::UnknownVariable: return "UnknownVariable";
    case ErrorKind::ZeroPolynomial: return "ZeroPolynomial";
    case ErrorKind::NotPolynomialField: return "NotPolynomialField";
    case ErrorKind::PositiveDimensionalSingularLocus: return "PositiveDimensionalSingularLocus";
    case ErrorKind::UnsupportedDegree: return "UnsupportedDegree";
    case ErrorKind::DegenerateParameters: return "DegenerateParameters";
    case ErrorKind::NotNormalized: return "NotNormalized";
    case ErrorKind::PoleEncountered: return "PoleEncountered";
    case ErrorKind::NonFiniteState: return "NonFiniteState";
    case ErrorKind::SignChange: return "SignChange";
    case ErrorKind::ArityZero: return "ArityZero";
    case ErrorKind::NonRepresentableCoefficient: return "NonRepresentableCoefficient";
    case ErrorKind::InvalidArgument: return "InvalidArgument";
    case ErrorKind::SyntaxError: return "SyntaxError";
    case ErrorKind::DuplicateEquation: return "DuplicateEquation";
    case ErrorKind::UndeclaredName: return "UndeclaredName";
    case ErrorKind::MissingEquation: return "MissingEquation";
  }
  return "Unknown";
}

}  // namespace invcurve
