#include "hullcodes/error.hpp"

namespace hc {

std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::NotPrime: return "NotPrime";
    case ErrorKind::ReducibleModulus: return "ReducibleModulus";
    case ErrorKind::DegreeMismatch: return "DegreeMismatch";
    case ErrorKind::NotASubfield: return "NotASubfield";
    case ErrorKind::EvenCharacteristic: return "EvenCharacteristic";
    case ErrorKind::OddCharacteristic: return "OddCharacteristic";
    case ErrorKind::ParseError: return "ParseError";
    case ErrorKind::UndefinedSymbol: return "UndefinedSymbol";
    case ErrorKind::ExponentOverflow: return "ExponentOverflow";
    case ErrorKind::WrongCodomain: return "WrongCodomain";
    case ErrorKind::NotWeaklyRegular: return "NotWeaklyRegular";
    case ErrorKind::RaggedRows: return "RaggedRows";
    case ErrorKind::EmptyLength: return "EmptyLength";
    case ErrorKind::TooLarge: return "TooLarge";
    case ErrorKind::ZeroCode: return "ZeroCode";
    case ErrorKind::CannotFrontLoad: return "CannotFrontLoad";
    case ErrorKind::DimensionTooLarge: return "DimensionTooLarge";
    case ErrorKind::EmptySet: return "EmptySet";
    case ErrorKind::BadDegree: return "BadDegree";
    case ErrorKind::BadParameters: return "BadParameters";
    case ErrorKind::MinusOneNotSquare: return "MinusOneNotSquare";
    case ErrorKind::BadAlpha: return "BadAlpha";
    case ErrorKind::BadBeta: return "BadBeta";
    case ErrorKind::NotIndependent: return "NotIndependent";
    case ErrorKind::BadL: return "BadL";
    case ErrorKind::OddK: return "OddK";
    case ErrorKind::NeedDistinctAlphas: return "NeedDistinctAlphas";
    case ErrorKind::AlphaZero: return "AlphaZero";
    case ErrorKind::NonIntegerSum: return "NonIntegerSum";
    case ErrorKind::NotBent: return "NotBent";
    case ErrorKind::AlphaOutsidePrimeField: return "AlphaOutsidePrimeField";
    case ErrorKind::AffineFunction: return "AffineFunction";
    case ErrorKind::HypothesisFailed: return "HypothesisFailed";
    case ErrorKind::NotInDual: return "NotInDual";
    case ErrorKind::NotPN: return "NotPN";
    case ErrorKind::InvalidArgument: return "InvalidArgument";
  }
  return "Unknown";
}

}  // namespace hc
