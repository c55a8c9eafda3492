#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace cachelab {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A decision or admission would leave more than k units resident.
class CapacityError : public Error {
 public:
  using Error::Error;
};

/// A policy or decision is incompatible with the problem parameters
/// (e.g. zapping while zapping is disabled, Marking on sized files).
class ModelError : public Error {
 public:
  using Error::Error;
};

/// A policy decision references a file in the wrong state (evicting a file
/// that is not resident, zapping one that already is).
class DecisionError : public Error {
 public:
  using Error::Error;
};

/// A monitored inequality or cross-check failed. The CLI maps this to exit 2.
class InvariantViolation : public Error {
 public:
  using Error::Error;
};

/// Oracle instance exceeds the exhaustive-search limits.
class OracleLimitError : public Error {
 public:
  using Error::Error;
};

/// Covering constraint cannot be satisfied: every variable is frozen.
class UnsatisfiableConstraint : public Error {
 public:
  using Error::Error;
};

class ParseError : public Error {
 public:
  ParseError(std::size_t line, const std::string& reason)
      : Error("line " + std::to_string(line) + ": " + reason), line_(line) {}
  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

}  // namespace cachelab
