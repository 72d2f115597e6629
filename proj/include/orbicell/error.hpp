#pragma once

#include <stdexcept>
#include <string>

namespace orbicell {

enum class ErrorKind {
  InvalidInput,      // malformed data: bad ids, bad tables, bad references
  ValidationFailed,  // a mathematical check rejected otherwise well-formed data
  ResourceLimit,     // a configured budget was exceeded
  EmptyFixedSet,     // the fixed-point complex has no vertices
  InternalError,     // an internal invariant broke; indicates a bug
};

struct Error : std::runtime_error {
  ErrorKind kind;
  Error(ErrorKind k, const std::string& msg) : std::runtime_error(msg), kind(k) {}
};

[[noreturn]] inline void fail(ErrorKind k, const std::string& msg) { throw Error(k, msg); }

inline const char* error_kind_name(ErrorKind k) {
  switch (k) {
    case ErrorKind::InvalidInput: return "InvalidInput";
    case ErrorKind::ValidationFailed: return "ValidationFailed";
    case ErrorKind::ResourceLimit: return "ResourceLimit";
    case ErrorKind::EmptyFixedSet: return "EmptyFixedSet";
    case ErrorKind::InternalError: return "InternalError";
  }
  return "UnknownError";
}

}  // namespace orbicell
