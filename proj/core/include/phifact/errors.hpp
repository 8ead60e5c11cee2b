#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace phifact {

// Argument outside a supported range (sieve limits, table indices, ...).
class BoundsError : public std::out_of_range {
 public:
  using std::out_of_range::out_of_range;
};

// Argument violates a mathematical precondition (n = 0, composite q, ...).
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

class ArithmeticError : public std::overflow_error {
 public:
  using std::overflow_error::overflow_error;
};

class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& what, std::size_t line)
      : std::runtime_error("line " + std::to_string(line) + ": " + what), line_(line) {}
  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

// Thrown by the solver when c(a,b) lies beyond the table. lower_bound() is a
// value c is known to be at least, so callers can size the next table.
class TableExhausted : public std::runtime_error {
 public:
  TableExhausted(const std::string& what, std::uint64_t lower_bound)
      : std::runtime_error(what), lower_bound_(lower_bound) {}
  std::uint64_t lower_bound() const noexcept { return lower_bound_; }

 private:
  std::uint64_t lower_bound_;
};

}  // namespace phifact
