#pragma once

#include <stdexcept>
#include <string>

namespace gdelta {

/// Bad arguments or malformed input (CLI exit code 2).
class InvalidInput : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A checked 64/128-bit operation would have wrapped.
class OverflowError : public std::overflow_error {
 public:
  using std::overflow_error::overflow_error;
};

/// A node limit, list-size cap or wall-clock budget was hit (CLI exit code 3).
class ResourceCapExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A witness failed independent re-certification. Always a bug (CLI exit code 4).
class VerificationFailure : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace gdelta
