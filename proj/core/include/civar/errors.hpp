#pragma once

#include <stdexcept>
#include <string>

namespace civar {

// Error taxonomy shared by the library and the CLI. Each kind maps to one
// exit code and carries a short machine-readable reason.
class Error : public std::runtime_error {
 public:
  Error(std::string reason, const std::string& message)
      : std::runtime_error(message), reason_(std::move(reason)) {}
  const std::string& reason() const noexcept { return reason_; }
  virtual int exit_code() const noexcept = 0;

 private:
  std::string reason_;
};

// Malformed input or violated precondition.
class InputError : public Error {
 public:
  using Error::Error;
  explicit InputError(const std::string& message) : Error("input", message) {}
  int exit_code() const noexcept override { return 1; }
};

// A configured budget (S-pairs, degree, steps, attempts) was exceeded.
class ResourceError : public Error {
 public:
  using Error::Error;
  explicit ResourceError(const std::string& message) : Error("budget", message) {}
  int exit_code() const noexcept override { return 2; }
};

// A theorem-level check failed on a concrete instance.
class VerificationError : public Error {
 public:
  using Error::Error;
  explicit VerificationError(const std::string& message)
      : Error("verification", message) {}
  int exit_code() const noexcept override { return 3; }
};

// An internal invariant was violated (e.g. a broken resolution).
class InternalError : public Error {
 public:
  explicit InternalError(const std::string& message)
      : Error("internal_invariant", message) {}
  int exit_code() const noexcept override { return 3; }
};

}  // namespace civar
