#ifndef GENSCHED_ERROR_HPP
#define GENSCHED_ERROR_HPP

#include <cstddef>
#include <stdexcept>
#include <string>

namespace gensched {

/// Base of every error raised by the library.
class Error : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// A sign constraint or economic assumption on SystemParams failed.
/// `which()` names the violated inequality.
class AssumptionViolated : public Error {
public:
  explicit AssumptionViolated(std::string which)
      : Error("parameter assumption violated: " + which), which_(std::move(which)) {}
  const std::string& which() const noexcept { return which_; }

private:
  std::string which_;
};

class LengthMismatch : public Error {
public:
  LengthMismatch(std::size_t expected, std::size_t got)
      : Error("length mismatch: expected " + std::to_string(expected) + ", got " +
              std::to_string(got)) {}
};

class HorizonTooLarge : public Error {
public:
  HorizonTooLarge(std::size_t horizon, std::size_t limit)
      : Error("horizon " + std::to_string(horizon) + " exceeds enumeration limit " +
              std::to_string(limit)) {}
};

class DomainError : public Error {
public:
  using Error::Error;
};

class DegenerateWindow : public Error {
public:
  using Error::Error;
};

class RangeError : public Error {
public:
  using Error::Error;
};

class EmptyFleet : public Error {
public:
  EmptyFleet() : Error("generator fleet is empty") {}
};

/// Malformed input text. `line()` is 1-based, 0 when not tied to a line.
class ParseError : public Error {
public:
  ParseError(std::size_t line, const std::string& what)
      : Error(line ? "line " + std::to_string(line) + ": " + what : what), line_(line) {}
  std::size_t line() const noexcept { return line_; }

private:
  std::size_t line_;
};

/// Well-formed input whose value is out of range.
class ValidationError : public Error {
public:
  ValidationError(std::string field, std::size_t line, const std::string& what)
      : Error("line " + std::to_string(line) + ", field '" + field + "': " + what),
        field_(std::move(field)),
        line_(line) {}
  const std::string& field() const noexcept { return field_; }
  std::size_t line() const noexcept { return line_; }

private:
  std::string field_;
  std::size_t line_;
};

class IoError : public Error {
public:
  using Error::Error;
};

}  // namespace gensched

#endif
