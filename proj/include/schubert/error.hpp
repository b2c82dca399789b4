#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace schubert {

enum class ErrorCode {
  NonPrimeCharacteristic,
  UnsupportedExtension,
  InvalidModulus,
  DivisionByZero,
  SpecMismatch,
  UnsupportedType,
  IndexOutOfRange,
  IndexError,
  SystemMismatch,
  GroupTooLarge,
  NotNested,
  SingularMatrix,
  TooLarge,
  PointNotInSet,
  CellTooLarge,
  InvalidQ,
  LineNotInStructure,
  KeyNotFound,
  ParseError,
  InvalidStructure,
};

std::string_view error_code_name(ErrorCode code);

/// Single exception type for every domain failure; `code()` distinguishes them.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(std::string(error_code_name(code)) + ": " + what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

inline std::string_view error_code_name(ErrorCode code) {
  switch (code) {
    case ErrorCode::NonPrimeCharacteristic: return "NonPrimeCharacteristic";
    case ErrorCode::UnsupportedExtension: return "UnsupportedExtension";
    case ErrorCode::InvalidModulus: return "InvalidModulus";
    case ErrorCode::DivisionByZero: return "DivisionByZero";
    case ErrorCode::SpecMismatch: return "SpecMismatch";
    case ErrorCode::UnsupportedType: return "UnsupportedType";
    case ErrorCode::IndexOutOfRange: return "IndexOutOfRange";
    case ErrorCode::IndexError: return "IndexError";
    case ErrorCode::SystemMismatch: return "SystemMismatch";
    case ErrorCode::GroupTooLarge: return "GroupTooLarge";
    case ErrorCode::NotNested: return "NotNested";
    case ErrorCode::SingularMatrix: return "SingularMatrix";
    case ErrorCode::TooLarge: return "TooLarge";
    case ErrorCode::PointNotInSet: return "PointNotInSet";
    case ErrorCode::CellTooLarge: return "CellTooLarge";
    case ErrorCode::InvalidQ: return "InvalidQ";
    case ErrorCode::LineNotInStructure: return "LineNotInStructure";
    case ErrorCode::KeyNotFound: return "KeyNotFound";
    case ErrorCode::ParseError: return "ParseError";
    case ErrorCode::InvalidStructure: return "InvalidStructure";
  }
  return "Unknown";
}

}  // namespace schubert
