#pragma once

#include <stdexcept>
#include <string>

namespace pbw {

/// A degree-dependent query went past the bound a truncated computation was
/// certified for.
class OutOfCertifiedRange : public std::out_of_range {
 public:
  using std::out_of_range::out_of_range;
};

/// The operation is not defined in the current scalar mode (for instance a
/// characteristic-zero criterion evaluated over F_p).
class Unsupported : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

/// A relation mixes homogeneous components of different degrees.
class InhomogeneousRelation : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A nonzero constant was reached during completion.
class UnitIdeal : public std::runtime_error {
 public:
  UnitIdeal() : std::runtime_error("ideal is the whole algebra") {}
};

/// A precondition of a structural computation (triangularity, stability,
/// coassociativity, ...) failed; the message names the failing check.
class HypothesisFailure : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed textual input. `line` and `column` are 1-based; 0 means unknown.
class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& message, int line, int column)
      : std::runtime_error(format(message, line, column)),
        line_(line),
        column_(column) {}

  int line() const { return line_; }
  int column() const { return column_; }

 private:
  static std::string format(const std::string& message, int line, int column) {
    if (line <= 0 && column <= 0) return message;
    if (line <= 0) return "column " + std::to_string(column) + ": " + message;
    return "line " + std::to_string(line) + ", column " +
           std::to_string(column) + ": " + message;
  }

  int line_;
  int column_;
};

}  // namespace pbw
