#pragma once

#include <stdexcept>
#include <string>

namespace pmst {

enum class ErrorCode {
  kDisconnected,
  kDegenerateCrossings,
  kCapExceeded,
  kUnperturbable,
  kBadK,
  kBadRange,
  kDivisionByZero,
};

const char* to_string(ErrorCode code);

/// Every failure raised by the library carries one of the codes above.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace pmst
