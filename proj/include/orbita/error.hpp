#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace orbita {

/// Stable error codes. The string form is part of the CLI's JSON output.
enum class ErrorCode {
  ParseError,
  EmptyPartition,
  NonPositivePart,
  OddTotal,
  NotTypeD,
  MalformedTypeD,
  InvalidLevi,
  SearchCapExceeded,
  NotRichardson,
  TruncationTooShallow,
  DegenerateSample,
  UnresolvedValuation,
  OddValuation,
  NonSquareLeading,
  NonSquareC0,
  EndpointMismatch,
  ZeroChainValue,
  TooLarge,
  UnstableNormalForm,
  InvalidArgument,
};

constexpr std::string_view to_string(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::ParseError: return "ParseError";
    case ErrorCode::EmptyPartition: return "EmptyPartition";
    case ErrorCode::NonPositivePart: return "NonPositivePart";
    case ErrorCode::OddTotal: return "OddTotal";
    case ErrorCode::NotTypeD: return "NotTypeD";
    case ErrorCode::MalformedTypeD: return "MalformedTypeD";
    case ErrorCode::InvalidLevi: return "InvalidLevi";
    case ErrorCode::SearchCapExceeded: return "SearchCapExceeded";
    case ErrorCode::NotRichardson: return "NotRichardson";
    case ErrorCode::TruncationTooShallow: return "TruncationTooShallow";
    case ErrorCode::DegenerateSample: return "DegenerateSample";
    case ErrorCode::UnresolvedValuation: return "UnresolvedValuation";
    case ErrorCode::OddValuation: return "OddValuation";
    case ErrorCode::NonSquareLeading: return "NonSquareLeading";
    case ErrorCode::NonSquareC0: return "NonSquareC0";
    case ErrorCode::EndpointMismatch: return "EndpointMismatch";
    case ErrorCode::ZeroChainValue: return "ZeroChainValue";
    case ErrorCode::TooLarge: return "TooLarge";
    case ErrorCode::UnstableNormalForm: return "UnstableNormalForm";
    case ErrorCode::InvalidArgument: return "InvalidArgument";
  }
  return "Unknown";
}

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& detail)
      : std::runtime_error(std::string(to_string(code)) + ": " + detail), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace orbita
