#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace hc {

enum class ErrorKind {
  NotPrime,
  ReducibleModulus,
  DegreeMismatch,
  NotASubfield,
  EvenCharacteristic,
  OddCharacteristic,
  ParseError,
  UndefinedSymbol,
  ExponentOverflow,
  WrongCodomain,
  NotWeaklyRegular,
  RaggedRows,
  EmptyLength,
  TooLarge,
  ZeroCode,
  CannotFrontLoad,
  DimensionTooLarge,
  EmptySet,
  BadDegree,
  BadParameters,
  MinusOneNotSquare,
  BadAlpha,
  BadBeta,
  NotIndependent,
  BadL,
  OddK,
  NeedDistinctAlphas,
  AlphaZero,
  NonIntegerSum,
  NotBent,
  AlphaOutsidePrimeField,
  AffineFunction,
  HypothesisFailed,
  NotInDual,
  NotPN,
  InvalidArgument,
};

std::string_view to_string(ErrorKind kind);

/// Every library failure carries a machine-checkable kind.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace hc
