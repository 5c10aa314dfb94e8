#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace starstab {

enum class ErrorCode {
  invalid_parameter,
  capacity_exceeded,
  parse_error,
  schema_mismatch,
  io_error,
};

std::string_view to_string(ErrorCode code) noexcept;

/// Every recoverable failure in the library is reported as an Error carrying
/// one of the categories above; the CLI maps all of them to exit status 2.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

[[noreturn]] inline void fail(ErrorCode code, const std::string& what) {
  throw Error(code, what);
}

}  // namespace starstab
