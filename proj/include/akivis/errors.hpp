#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace akivis {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Operands live over different generator sets, or a symbol/index is unknown.
class BasisMismatch : public Error {
 public:
  using Error::Error;
};

// A table or spec violates a construction invariant (grading closure,
// superanticommutativity, unit axiom, ...).
class InvalidInput : public Error {
 public:
  using Error::Error;
};

class NotApplicable : public Error {
 public:
  using Error::Error;
};

// Raised instead of silently dropping terms above the configured degree.
class TruncationError : public Error {
 public:
  TruncationError(int degree, int max_degree)
      : Error("degree " + std::to_string(degree) +
              " exceeds truncation degree " + std::to_string(max_degree)),
        degree_(degree),
        max_degree_(max_degree) {}
  TruncationError(std::size_t monomials, std::size_t limit)
      : Error(std::to_string(monomials) + " monomials exceed the limit of " +
              std::to_string(limit)),
        degree_(-1),
        max_degree_(-1) {}

  int degree() const noexcept { return degree_; }
  int max_degree() const noexcept { return max_degree_; }

 private:
  int degree_;
  int max_degree_;
};

class ParseError : public Error {
 public:
  ParseError(std::size_t line, std::size_t column, const std::string& what)
      : Error(std::to_string(line) + ":" + std::to_string(column) + ": " + what),
        line_(line),
        column_(column) {}

  std::size_t line() const noexcept { return line_; }
  std::size_t column() const noexcept { return column_; }

 private:
  std::size_t line_;
  std::size_t column_;
};

}  // namespace akivis
