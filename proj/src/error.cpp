#include "sg/error.hpp"

namespace sg {

std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::InvalidArgument: return "invalid-argument";
    case ErrorKind::UnsupportedSize: return "unsupported-size";
    case ErrorKind::NoInverse: return "no-inverse";
    case ErrorKind::InvalidState: return "invalid-state";
    case ErrorKind::InvalidData: return "invalid-data";
    case ErrorKind::UnknownOffset: return "unknown-offset";
    case ErrorKind::InconsistentData: return "inconsistent-data";
    case ErrorKind::InsufficientInput: return "insufficient-input";
    case ErrorKind::ConventionMismatch: return "convention-mismatch";
  }
  return "unknown";
}

}  // namespace sg
