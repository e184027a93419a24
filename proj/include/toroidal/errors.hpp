#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace toroidal {

enum class ErrorCode {
  MalformedGerm = 1,
  NotASublattice,
  TruncationInsufficient,
  NonUnimodular,
  InvalidCenterForm,
  StepBudgetExceeded,
  NotAFace,
  NotACone,
  InvalidPreRelation,
  ParseError,
  InvalidArgument,
};

/// Stable name used in reports and by the C API.
std::string_view error_name(ErrorCode code) noexcept;

class Error : public std::runtime_error {
public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(std::string(error_name(code)) + ": " + what),
        code_(code) {}

  ErrorCode code() const noexcept { return code_; }

private:
  ErrorCode code_;
};

[[noreturn]] inline void fail(ErrorCode code, const std::string& what) {
  throw Error(code, what);
}

}  // namespace toroidal
