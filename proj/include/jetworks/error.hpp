#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace jetworks {

enum class ErrorKind {
  InvalidArgument,
  OrderMismatch,
  CoprimeRequired,
  InconsistentPair,
  ExactRootUnavailable,
  NoRealRoot,
  NoFrobenius,
  BelowThreshold,
  SyntaxError,
  ResourceLimit,
  DegenerateCurve,
  InconsistentSamples,
  GridMismatch,
  TooShort,
};

std::string_view to_string(ErrorKind kind) noexcept;

// Every failure in the library is reported through this type; `kind()` is the
// machine-readable part, `what()` a one-line human reason.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& reason)
      : std::runtime_error(reason), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

// Syntax errors carry the byte offset where parsing stopped.
class ParseError : public Error {
 public:
  ParseError(std::size_t offset, const std::string& reason)
      : Error(ErrorKind::SyntaxError, reason + " at offset " + std::to_string(offset)),
        offset_(offset) {}

  std::size_t offset() const noexcept { return offset_; }

 private:
  std::size_t offset_;
};

}  // namespace jetworks
