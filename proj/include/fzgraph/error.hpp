#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace fzg {

/// Root of every exception thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Operands live in algebras with different generator counts.
class DimensionError : public Error {
 public:
  using Error::Error;
};

/// Matrix shape does not fit the operation (e.g. det of a non-square matrix).
class ShapeError : public Error {
 public:
  using Error::Error;
};

/// Matrix element requested between blades of different grade.
class GradeError : public Error {
 public:
  using Error::Error;
};

/// Index or vertex id outside its admissible range.
class RangeError : public Error {
 public:
  using Error::Error;
};

/// Malformed token in textual input.
class ParseError : public Error {
 public:
  ParseError(std::size_t line, const std::string& what)
      : Error("line " + std::to_string(line) + ": " + what), line_(line) {}
  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

/// Input that violates the simple-graph model (loops, duplicate edges).
/// line() is 0 when the graph was not read from text.
class FormatError : public Error {
 public:
  explicit FormatError(const std::string& what) : Error(what), line_(0) {}
  FormatError(std::size_t line, const std::string& what)
      : Error("line " + std::to_string(line) + ": " + what), line_(line) {}
  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

/// Input larger than an oracle cap or the exponential-size guard allows.
class SizeLimitError : public Error {
 public:
  using Error::Error;
};

/// An exactness check (divisibility, integrality) failed. Indicates a bug.
class ConsistencyError : public Error {
 public:
  using Error::Error;
};

}  // namespace fzg
