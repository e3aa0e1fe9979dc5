#pragma once

#include <stdexcept>
#include <string>

namespace bgg {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class ParseError : public Error {
 public:
  ParseError(const std::string& msg, std::size_t pos)
      : Error(msg + " at position " + std::to_string(pos)), pos_(pos) {}
  std::size_t position() const { return pos_; }

 private:
  std::size_t pos_;
};

class UnknownIdentifier : public ParseError {
 public:
  UnknownIdentifier(const std::string& name, std::size_t pos)
      : ParseError("unknown identifier '" + name + "'", pos), name_(name) {}
  const std::string& name() const { return name_; }

 private:
  std::string name_;
};

// Malformed input documents (JSON shape, missing fields).
class InputError : public Error {
 public:
  using Error::Error;
};

class DivisionByZero : public Error {
 public:
  DivisionByZero() : Error("division by the zero polynomial") {}
};

class PoleAtPoint : public Error {
 public:
  using Error::Error;
};

class DomainError : public Error {
 public:
  using Error::Error;
};

class SingularMatrix : public Error {
 public:
  SingularMatrix(const std::string& msg, std::size_t column)
      : Error(msg), column_(column) {}
  std::size_t column() const { return column_; }

 private:
  std::size_t column_;
};

class NonPolynomialRow : public Error {
 public:
  using Error::Error;
};

// Frame-level failures.
class NotA235Distribution : public Error {
 public:
  using Error::Error;
};

class DegenerateFrame : public Error {
 public:
  using Error::Error;
};

class PathError : public Error {
 public:
  using Error::Error;
};

class NonRationalF : public Error {
 public:
  using Error::Error;
};

class MonomialCapExceeded : public Error {
 public:
  using Error::Error;
};

class ClosureFailure : public Error {
 public:
  using Error::Error;
};

}  // namespace bgg
