#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace miura {

enum class Errc {
  // field
  DivisionByZero,
  FieldMismatch,
  NotPrime,
  Unsupported,
  // polynomials
  ArityMismatch,
  RingMismatch,
  ZeroPolynomial,
  SyntaxError,
  UnknownVariable,
  // ideals
  ZeroDivisorIdeal,
  ZeroIdeal,
  CurveMismatch,
  NotZeroDimensional,
  // curve construction
  NotMonic,
  LeadingExponentInB,
  BodyMonomialNotInB,
  WrongGeneratorCount,
  WeightsNotCoprime,
  UnitCurveIdeal,
  PointNotOnCurve,
  // oracle
  SingularCurve,
  WrongCurveShape,
  // script
  NameError,
  EvalError,
  // never expected to fire
  InternalError,
};

const char* errc_name(Errc c);

// Single exception type for the whole library; `code` identifies the
// condition, `line`/`column` are set for script and polynomial syntax errors.
class Error : public std::runtime_error {
public:
  Error(Errc code, std::string message, std::size_t line = 0, std::size_t column = 0)
      : std::runtime_error(std::string(errc_name(code)) + ": " + message),
        code_(code), line_(line), column_(column) {}

  Errc code() const noexcept { return code_; }
  std::size_t line() const noexcept { return line_; }
  std::size_t column() const noexcept { return column_; }

private:
  Errc code_;
  std::size_t line_;
  std::size_t column_;
};

inline const char* errc_name(Errc c) {
  switch (c) {
    case Errc::DivisionByZero: return "DivisionByZero";
    case Errc::FieldMismatch: return "FieldMismatch";
    case Errc::NotPrime: return "NotPrime";
    case Errc::Unsupported: return "Unsupported";
    case Errc::ArityMismatch: return "ArityMismatch";
    case Errc::RingMismatch: return "RingMismatch";
    case Errc::ZeroPolynomial: return "ZeroPolynomial";
    case Errc::SyntaxError: return "SyntaxError";
    case Errc::UnknownVariable: return "UnknownVariable";
    case Errc::ZeroDivisorIdeal: return "ZeroDivisorIdeal";
    case Errc::ZeroIdeal: return "ZeroIdeal";
    case Errc::CurveMismatch: return "CurveMismatch";
    case Errc::NotZeroDimensional: return "NotZeroDimensional";
    case Errc::NotMonic: return "NotMonic";
    case Errc::LeadingExponentInB: return "LeadingExponentInB";
    case Errc::BodyMonomialNotInB: return "BodyMonomialNotInB";
    case Errc::WrongGeneratorCount: return "WrongGeneratorCount";
    case Errc::WeightsNotCoprime: return "WeightsNotCoprime";
    case Errc::UnitCurveIdeal: return "UnitCurveIdeal";
    case Errc::PointNotOnCurve: return "PointNotOnCurve";
    case Errc::SingularCurve: return "SingularCurve";
    case Errc::WrongCurveShape: return "WrongCurveShape";
    case Errc::NameError: return "NameError";
    case Errc::EvalError: return "EvalError";
    case Errc::InternalError: return "InternalError";
  }
  return "Error";
}

// Invariant check that survives NDEBUG; a failure is a library bug.
inline void internal_check(bool ok, const char* what) {
  if (!ok) throw Error(Errc::InternalError, what);
}

}  // namespace miura
