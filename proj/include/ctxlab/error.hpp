#pragma once

#include <stdexcept>
#include <string>

namespace ctxlab {

enum class ErrorKind {
  Syntax,
  DuplicateContext,
  DuplicateAtomInContext,
  PasteInvalid,
  UnknownAtom,
  TooLarge,
  WeightCountMismatch,
  WeightsNotNormalized,
  MissingAtom,
  MissingCoordinate,
  DimensionMismatch,
  ConditionFailed,
  NonUnitState,
  NonUnitVector,
  RepeatedEigenvalue,
  NonOrthonormalContext,
  UnknownContext,
  UnknownEntry,
  InvalidArgument,
};

const char* to_string(ErrorKind kind);

// Base of every failure raised by the library. Violations that are data
// (validation reports, measure checks) are returned, not thrown.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& message)
      : std::runtime_error(message), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

class ParseError : public Error {
 public:
  ParseError(ErrorKind kind, std::size_t line, std::size_t column, const std::string& message)
      : Error(kind, "line " + std::to_string(line) + ", column " + std::to_string(column) + ": " + message),
        line_(line),
        column_(column) {}

  std::size_t line() const noexcept { return line_; }
  std::size_t column() const noexcept { return column_; }

 private:
  std::size_t line_;
  std::size_t column_;
};

}  // namespace ctxlab
