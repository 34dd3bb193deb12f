#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace fta {

enum class ErrorKind {
  InvalidArgument,
  DegenerateZeroPolynomial,
  ZeroConstantTerm,
  CannotDeflateConstant,
  NotApplicableToConstant,
  BelowThreshold,
  AlreadyAtRoot,
  StepStalled,
  NoRootExists,
  ParseError,
  EmptyPolynomial,
};

constexpr std::string_view to_string(ErrorKind kind) noexcept {
  switch (kind) {
    case ErrorKind::InvalidArgument: return "InvalidArgument";
    case ErrorKind::DegenerateZeroPolynomial: return "DegenerateZeroPolynomial";
    case ErrorKind::ZeroConstantTerm: return "ZeroConstantTerm";
    case ErrorKind::CannotDeflateConstant: return "CannotDeflateConstant";
    case ErrorKind::NotApplicableToConstant: return "NotApplicableToConstant";
    case ErrorKind::BelowThreshold: return "BelowThreshold";
    case ErrorKind::AlreadyAtRoot: return "AlreadyAtRoot";
    case ErrorKind::StepStalled: return "StepStalled";
    case ErrorKind::NoRootExists: return "NoRootExists";
    case ErrorKind::ParseError: return "ParseError";
    case ErrorKind::EmptyPolynomial: return "EmptyPolynomial";
  }
  return "Unknown";
}

/// Every failure raised by the library. `kind()` identifies the contract that
/// was violated; the message is a one-line human diagnostic.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& message)
      : std::runtime_error(message), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

/// Raised by the polynomial parser; `position` is the 1-based token index.
class ParseError : public Error {
 public:
  ParseError(std::size_t position, const std::string& detail)
      : Error(ErrorKind::ParseError,
              "parse error at token " + std::to_string(position) + ": " + detail),
        position_(position) {}

  std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

}  // namespace fta
