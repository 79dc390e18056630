#pragma once

#include <stdexcept>
#include <string>

namespace kaclab {

// Error categories. The numeric values are shared with the C API status codes
// in kaclab.h and must stay in sync with them.
enum class ErrorCode : int {
  kDomain = 1,
  kUnsupportedOrder = 2,
  kConfig = 3,
  kInsufficientData = 4,
  kIndeterminate = 5,
  kUnreliable = 6,
  kInconsistent = 7,
  kRefinement = 8,
  kCertificateUnavailable = 9,
  kUndefined = 10,
  kTailTolerance = 11,
  kIo = 12,
};

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

inline void require(bool ok, ErrorCode code, const std::string& what) {
  if (!ok) fail(code, what);
}

const char* error_code_name(ErrorCode code) noexcept;

}  // namespace kaclab
