#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace weyl {

enum class ErrorCode {
  Overflow,
  NotInCatalog,
  InvalidWeights,
  HypothesisNotMet,
  MissingInvariant,
  InconsistentHypotheses,
  InfiniteUpper,
  NonConvergence,
  SingularMetric,
  InvalidDescriptor,
};

std::string_view error_name(ErrorCode code);

// Errors that come from the mathematics or the catalog rather than from
// malformed input. The CLI maps these to exit status 1.
class DomainError : public std::runtime_error {
 public:
  DomainError(ErrorCode code, const std::string& detail)
      : std::runtime_error(std::string(error_name(code)) + ": " + detail), code_(code), detail_(detail) {}

  ErrorCode code() const noexcept { return code_; }
  const std::string& detail() const noexcept { return detail_; }

 private:
  ErrorCode code_;
  std::string detail_;
};

// Malformed text input. Line and column are 1-based; the CLI maps these to
// exit status 2.
class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& message, int line, int column)
      : std::runtime_error(message + " (line " + std::to_string(line) + ", column " + std::to_string(column) + ")"),
        line_(line),
        column_(column) {}

  int line() const noexcept { return line_; }
  int column() const noexcept { return column_; }

 private:
  int line_;
  int column_;
};

}  // namespace weyl
