#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace mcgl {

/// Stable error codes. The CLI prints these names, so do not rename them.
enum class Errc {
  FieldMismatch,
  DivisionByZero,
  DivisionByZeroPoly,
  BothZero,
  ZeroConstantTerm,
  ZeroPolynomial,
  NotMonic,
  ConstantPolynomial,
  NonIntegerCoefficients,
  NotPrime,
  Singular,
  DimensionMismatch,
  BadIndices,
  ZeroParameter,
  FactorizationUnavailable,
  DimensionTooSmall,
  CentralMatrix,
  WrongDimension,
  NoRoot,
  NotInT,
  HasDegreeOneFactor,
  PreconditionViolated,
  SynthesisFailed,
  VerificationFailed,
  ShapeMismatch,
  NotSimilar,
  Unreachable,
  BrokenChain,
  CentralElement,
  TooLarge,
  ParseError,
  UsageError,
};

constexpr std::string_view errc_name(Errc c) {
  switch (c) {
    case Errc::FieldMismatch: return "FieldMismatch";
    case Errc::DivisionByZero: return "DivisionByZero";
    case Errc::DivisionByZeroPoly: return "DivisionByZeroPoly";
    case Errc::BothZero: return "BothZero";
    case Errc::ZeroConstantTerm: return "ZeroConstantTerm";
    case Errc::ZeroPolynomial: return "ZeroPolynomial";
    case Errc::NotMonic: return "NotMonic";
    case Errc::ConstantPolynomial: return "ConstantPolynomial";
    case Errc::NonIntegerCoefficients: return "NonIntegerCoefficients";
    case Errc::NotPrime: return "NotPrime";
    case Errc::Singular: return "Singular";
    case Errc::DimensionMismatch: return "DimensionMismatch";
    case Errc::BadIndices: return "BadIndices";
    case Errc::ZeroParameter: return "ZeroParameter";
    case Errc::FactorizationUnavailable: return "FactorizationUnavailable";
    case Errc::DimensionTooSmall: return "DimensionTooSmall";
    case Errc::CentralMatrix: return "CentralMatrix";
    case Errc::WrongDimension: return "WrongDimension";
    case Errc::NoRoot: return "NoRoot";
    case Errc::NotInT: return "NotInT";
    case Errc::HasDegreeOneFactor: return "HasDegreeOneFactor";
    case Errc::PreconditionViolated: return "PreconditionViolated";
    case Errc::SynthesisFailed: return "SynthesisFailed";
    case Errc::VerificationFailed: return "VerificationFailed";
    case Errc::ShapeMismatch: return "ShapeMismatch";
    case Errc::NotSimilar: return "NotSimilar";
    case Errc::Unreachable: return "Unreachable";
    case Errc::BrokenChain: return "BrokenChain";
    case Errc::CentralElement: return "CentralElement";
    case Errc::TooLarge: return "TooLarge";
    case Errc::ParseError: return "ParseError";
    case Errc::UsageError: return "UsageError";
  }
  return "Unknown";
}

class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what)
      : std::runtime_error(std::string(errc_name(code)) + ": " + what), code_(code) {}

  Errc code() const noexcept { return code_; }

 private:
  Errc code_;
};

[[noreturn]] inline void fail(Errc code, const std::string& what) { throw Error(code, what); }

}  // namespace mcgl
