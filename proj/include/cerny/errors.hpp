#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace cerny {

/// A letter index outside the automaton's alphabet, or a malformed word string.
class InvalidWord : public std::invalid_argument {
public:
  using std::invalid_argument::invalid_argument;
};

/// An argument outside the mathematical domain of an operation.
class DomainError : public std::domain_error {
public:
  using std::domain_error::domain_error;
};

/// Operands of incompatible dimension.
class SizeMismatch : public std::invalid_argument {
public:
  using std::invalid_argument::invalid_argument;
};

/// A search or enumeration would exceed a configured limit.
/// `parameter()` names the limit that was hit (e.g. "limit", "budget").
class CapacityError : public std::runtime_error {
public:
  CapacityError(std::string parameter, const std::string& what)
      : std::runtime_error(what), parameter_(std::move(parameter)) {}

  const std::string& parameter() const noexcept { return parameter_; }

private:
  std::string parameter_;
};

/// A placement rule for free rows that would break minimality.
class PolicyError : public std::invalid_argument {
public:
  using std::invalid_argument::invalid_argument;
};

/// Malformed automaton text. Line and column are 1-based.
class ParseError : public std::runtime_error {
public:
  ParseError(std::size_t line, std::size_t column, const std::string& message)
      : std::runtime_error("line " + std::to_string(line) + ", column " +
                           std::to_string(column) + ": " + message),
        line_(line),
        column_(column) {}

  std::size_t line() const noexcept { return line_; }
  std::size_t column() const noexcept { return column_; }

private:
  std::size_t line_;
  std::size_t column_;
};

}  // namespace cerny
