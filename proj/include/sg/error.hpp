#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace sg {

enum class ErrorKind {
  InvalidArgument,
  UnsupportedSize,
  NoInverse,
  InvalidState,
  InvalidData,
  UnknownOffset,
  InconsistentData,
  InsufficientInput,
  ConventionMismatch,
};

std::string_view to_string(ErrorKind kind);

// All toolkit failures are reported through this one exception type; the
// kind decides how the CLI maps the failure to an exit code.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace sg
