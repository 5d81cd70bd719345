#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace mkp {

/// Base of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Dimensions of two objects disagree (instance vs schedule, matrix shapes).
class StructuralError : public Error {
 public:
  using Error::Error;
};

/// A parameter is outside its documented domain.
class ArgumentError : public Error {
 public:
  using Error::Error;
};

/// A computed value does not fit the 64-bit integer range.
class OverflowError : public Error {
 public:
  using Error::Error;
};

/// Malformed text input. Carries the 1-based line and the offending field.
class ParseError : public Error {
 public:
  ParseError(std::size_t line, std::string field, const std::string& message)
      : Error("line " + std::to_string(line) + ", field '" + field + "': " + message),
        line_(line),
        field_(std::move(field)) {}

  std::size_t line() const noexcept { return line_; }
  const std::string& field() const noexcept { return field_; }

 private:
  std::size_t line_;
  std::string field_;
};

/// A configured work/memory guard would be exceeded. `estimate` is the
/// amount of work (or table entries) the request would have needed.
class GuardRefusal : public Error {
 public:
  GuardRefusal(const std::string& what, double estimate, double limit)
      : Error(what + " (estimate " + format_amount(estimate) + ", limit " + format_amount(limit) + ")"),
        estimate_(estimate),
        limit_(limit) {}

  double estimate() const noexcept { return estimate_; }
  double limit() const noexcept { return limit_; }

 private:
  static std::string format_amount(double v);

  double estimate_;
  double limit_;
};

/// The LP has no finite optimum.
class UnboundedError : public Error {
 public:
  using Error::Error;
};

}  // namespace mkp
