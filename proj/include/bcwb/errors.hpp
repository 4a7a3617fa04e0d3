#pragma once

#include <stdexcept>
#include <string>

namespace bcwb {

enum class ErrorKind {
    ContainmentViolation,
    NotAChainMap,
    DimensionMismatch,
    IndexOutOfRange,
    RangeError,
    SyntaxError,
    DuplicateDeclaration,
    MissingDeclaration,
    IntegrabilityError,
    AsymmetricDiamond,
    MissingTableEntry,
    SchemaViolation,
};

class Error : public std::runtime_error {
  public:
    Error(ErrorKind kind, std::string message) : std::runtime_error(std::move(message)), kind_(kind) {}
    ErrorKind kind() const { return kind_; }

  private:
    ErrorKind kind_;
};

// Parse errors additionally carry a 1-based source position.
class ParseError : public Error {
  public:
    ParseError(ErrorKind kind, std::string message, int line, int column)
        : Error(kind, std::move(message)), line_(line), column_(column) {}
    int line() const { return line_; }
    int column() const { return column_; }

  private:
    int line_;
    int column_;
};

}  // namespace bcwb
