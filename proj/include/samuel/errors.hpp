#pragma once

#include <stdexcept>
#include <string>

namespace samuel {

/// Base class of every error raised by the library. `name()` is the stable
/// identifier surfaced by the CLI and the JSON reports.
class Error : public std::runtime_error {
 public:
  Error(std::string name, const std::string& what)
      : std::runtime_error(what), name_(std::move(name)) {}

  const std::string& name() const noexcept { return name_; }

 private:
  std::string name_;
};

#define SAMUEL_DEFINE_ERROR(Type)                                   \
  class Type : public Error {                                       \
   public:                                                          \
    explicit Type(const std::string& what) : Error(#Type, what) {}  \
  }

SAMUEL_DEFINE_ERROR(ArityMismatch);
SAMUEL_DEFINE_ERROR(FieldMismatch);
SAMUEL_DEFINE_ERROR(InvalidArgument);
SAMUEL_DEFINE_ERROR(NotZeroDimensional);
SAMUEL_DEFINE_ERROR(NoStabilization);
SAMUEL_DEFINE_ERROR(NoPolynomialWindow);
SAMUEL_DEFINE_ERROR(NonIntegerCoefficient);
SAMUEL_DEFINE_ERROR(NotAReduction);
SAMUEL_DEFINE_ERROR(SearchExhausted);

#undef SAMUEL_DEFINE_ERROR

/// Input errors carry the 1-based line they were found on (0 when unknown).
class ParseError : public Error {
 public:
  ParseError(const std::string& what, int line = 0)
      : Error("ParseError", line > 0 ? "line " + std::to_string(line) + ": " + what : what),
        line_(line) {}

  int line() const noexcept { return line_; }

 private:
  int line_;
};

}  // namespace samuel
