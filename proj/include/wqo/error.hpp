#pragma once

#include <stdexcept>
#include <string>

namespace wqo {

enum class ErrorCode {
  InvalidInput = 1,
  SizeCap = 2,
  Overflow = 3,
  UnknownName = 4,
  Unsupported = 5,
};

// Every failure the library reports on purpose is an Error; anything else
// escaping a public function is a bug.
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

inline void require(bool cond, ErrorCode code, const std::string& what) {
  if (!cond) fail(code, what);
}

}  // namespace wqo
