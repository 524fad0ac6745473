#pragma once

#include <stdexcept>
#include <string>

namespace fwb {

enum class ErrorCode {
  kParse,
  kInvalidArgument,
  kRingMismatch,
  kResourceLimit,
  kInconsistent,
  kIo,
};

const char* to_string(ErrorCode code);

// Single exception type for the library; the code drives C-API status values
// and CLI exit codes.
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

}  // namespace fwb
