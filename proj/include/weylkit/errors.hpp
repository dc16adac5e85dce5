#pragma once

#include <stdexcept>
#include <string>

namespace weylkit {

/// Base of every error raised by the library. `module()` names the
/// component that produced it so front ends can report the origin.
class Error : public std::runtime_error {
 public:
  Error(std::string module, const std::string& what)
      : std::runtime_error(module + ": " + what), module_(std::move(module)) {}
  const std::string& module() const noexcept { return module_; }

 private:
  std::string module_;
};

/// Inputs that violate an operation's contract (mismatched rings, bad
/// indices, malformed arguments).
class UsageError : public Error {
 public:
  using Error::Error;
};

/// A computation could not complete (search exhausted, window or truncation
/// too small, iteration cap hit).
class ComputationError : public Error {
 public:
  using Error::Error;
};

class VariableMismatch : public UsageError {
 public:
  explicit VariableMismatch(const std::string& what) : UsageError("core_arith", what) {}
};

class NotZeroDimensional : public ComputationError {
 public:
  explicit NotZeroDimensional(const std::string& what) : ComputationError("core_arith", what) {}
};

}  // namespace weylkit
