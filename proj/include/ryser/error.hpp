#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace ryser {

enum class ErrorCode {
  NotPrimePower,
  UnsupportedOrder,
  DivisionByZero,
  SamePoint,
  NotSquareOrder,
  NotAnArc,
  ArityMismatch,
  UnknownEdge,
  NotOddPrime,
  NuTooSmall,
  QTooSmall,
  InfeasibleChoice,
  SearchTooLarge,
  InvalidInput,
};

constexpr std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::NotPrimePower: return "NotPrimePower";
    case ErrorCode::UnsupportedOrder: return "UnsupportedOrder";
    case ErrorCode::DivisionByZero: return "DivisionByZero";
    case ErrorCode::SamePoint: return "SamePoint";
    case ErrorCode::NotSquareOrder: return "NotSquareOrder";
    case ErrorCode::NotAnArc: return "NotAnArc";
    case ErrorCode::ArityMismatch: return "ArityMismatch";
    case ErrorCode::UnknownEdge: return "UnknownEdge";
    case ErrorCode::NotOddPrime: return "NotOddPrime";
    case ErrorCode::NuTooSmall: return "NuTooSmall";
    case ErrorCode::QTooSmall: return "QTooSmall";
    case ErrorCode::InfeasibleChoice: return "InfeasibleChoice";
    case ErrorCode::SearchTooLarge: return "SearchTooLarge";
    case ErrorCode::InvalidInput: return "InvalidInput";
  }
  return "Unknown";
}

/// Every failure raised by the library carries one of the codes above; the
/// CLI prints `code()` as its diagnostic.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& detail)
      : std::runtime_error(std::string(to_string(code)) + ": " + detail), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace ryser
