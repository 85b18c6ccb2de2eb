#ifndef GROSSONE_ERROR_HPP
#define GROSSONE_ERROR_HPP

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>

namespace grossone {

enum class ErrorKind {
  DivisionByZero,
  InexactDivision,
  NegativePowerOfNonMonomial,
  ZeroToNonpositivePower,
  UnsupportedExponentiation,
  ParityUndefined,
  UnknownCharacter,
  MalformedNumber,
  SyntaxError,
  DepthLimitExceeded,
  UnboundName,
  NoBranchMatched,
  ArityMismatch,
  UnsupportedSummand,
  NotAMember,
  AlreadyMember,
  NotASubset,
  InvalidArgument,
};

constexpr std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::DivisionByZero: return "DivisionByZero";
    case ErrorKind::InexactDivision: return "InexactDivision";
    case ErrorKind::NegativePowerOfNonMonomial: return "NegativePowerOfNonMonomial";
    case ErrorKind::ZeroToNonpositivePower: return "ZeroToNonpositivePower";
    case ErrorKind::UnsupportedExponentiation: return "UnsupportedExponentiation";
    case ErrorKind::ParityUndefined: return "ParityUndefined";
    case ErrorKind::UnknownCharacter: return "UnknownCharacter";
    case ErrorKind::MalformedNumber: return "MalformedNumber";
    case ErrorKind::SyntaxError: return "SyntaxError";
    case ErrorKind::DepthLimitExceeded: return "DepthLimitExceeded";
    case ErrorKind::UnboundName: return "UnboundName";
    case ErrorKind::NoBranchMatched: return "NoBranchMatched";
    case ErrorKind::ArityMismatch: return "ArityMismatch";
    case ErrorKind::UnsupportedSummand: return "UnsupportedSummand";
    case ErrorKind::NotAMember: return "NotAMember";
    case ErrorKind::AlreadyMember: return "AlreadyMember";
    case ErrorKind::NotASubset: return "NotASubset";
    case ErrorKind::InvalidArgument: return "InvalidArgument";
  }
  return "Unknown";
}

/// 1-based line/column of a character in source text (columns count code points).
struct SourcePos {
  std::size_t line = 1;
  std::size_t column = 1;

  friend bool operator==(const SourcePos&, const SourcePos&) = default;
};

/// Base exception of the library. Every failure carries a stable kind.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& message)
      : std::runtime_error(message), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

/// Lexer and parser failures; always positioned.
class ParseError : public Error {
 public:
  ParseError(ErrorKind kind, SourcePos pos, const std::string& message)
      : Error(kind, std::to_string(pos.line) + ":" + std::to_string(pos.column) +
                        ": " + message),
        pos_(pos),
        detail_(message) {}

  SourcePos position() const noexcept { return pos_; }
  const std::string& detail() const noexcept { return detail_; }

 private:
  SourcePos pos_;
  std::string detail_;
};

}  // namespace grossone

#endif  // GROSSONE_ERROR_HPP
