#pragma once

#include <stdexcept>
#include <string>

namespace dgcm {

/// Base class of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Mismatched shapes, rings or variable sets.
class StructuralError : public Error {
 public:
  using Error::Error;
};

/// Input outside the supported fragment (inhomogeneous data, non-monomial
/// ideals where a combinatorial route is required, ...).
class UnsupportedInput : public Error {
 public:
  using Error::Error;
};

/// Input that would make a construction collapse (zero module in a trivial
/// extension, zero shift, ...).
class DegenerateInput : public Error {
 public:
  using Error::Error;
};

class PreconditionError : public Error {
 public:
  using Error::Error;
};

/// A prime that does not contain the H^0 ideal of a model.
class NotInSpectrum : public Error {
 public:
  using Error::Error;
};

class ParseError : public Error {
 public:
  ParseError(const std::string& what, int line, int column)
      : Error(what + " (line " + std::to_string(line) + ", column " +
              std::to_string(column) + ")"),
        line_(line),
        column_(column) {}

  int line() const { return line_; }
  int column() const { return column_; }

 private:
  int line_;
  int column_;
};

}  // namespace dgcm
