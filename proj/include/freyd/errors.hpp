#pragma once

#include <stdexcept>
#include <string>

namespace freyd {

// Base of every error raised by the engine. Mathematical failures that are
// part of a report (a failing coherence square, a non-isomorphism) are values,
// not exceptions.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class RingMismatch : public Error {
 public:
  using Error::Error;
};

class ShapeError : public Error {
 public:
  using Error::Error;
};

class NoSolution : public Error {
 public:
  using Error::Error;
};

class CapExceeded : public Error {
 public:
  using Error::Error;
};

class NotLiftable : public Error {
 public:
  using Error::Error;
};

class IllFormedFunctor : public Error {
 public:
  using Error::Error;
};

class NonConfluent : public Error {
 public:
  using Error::Error;
};

// Raised when a presentation-level result disagrees with the pointwise
// evaluation oracle. Never caught inside the library.
class InternalError : public Error {
 public:
  using Error::Error;
};

class ParseError : public Error {
 public:
  ParseError(const std::string& msg, int line, int column)
      : Error("line " + std::to_string(line) + ", column " +
              std::to_string(column) + ": " + msg),
        message_(msg),
        line_(line),
        column_(column) {}
  const std::string& message() const { return message_; }
  int line() const { return line_; }
  int column() const { return column_; }

 private:
  std::string message_;
  int line_;
  int column_;
};

// A mandatory item of the tensor-quiver data is absent. `clause` is the data
// clause number (1..7) of the quiver definition.
class MissingData : public Error {
 public:
  MissingData(int clause, const std::string& what)
      : Error("missing data (clause " + std::to_string(clause) + "): " + what),
        clause_(clause) {}
  int clause() const { return clause_; }

 private:
  int clause_;
};

}  // namespace freyd
