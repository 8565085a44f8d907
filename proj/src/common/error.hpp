// SPDX-License-Identifier: Apache-2.0
//
// hrris-sim: hybrid relay-reflecting surface link simulator
// Copyright (C) 2026 hrris-sim developers

#ifndef HRRIS_COMMON_ERROR_HPP
#define HRRIS_COMMON_ERROR_HPP

#include <stdexcept>
#include <string>

namespace hrris {

enum class ErrorCode {
  InvalidArgument,
  SingularMatrix,
  NonPositiveDeterminant,
  NotUnit,
  InvalidDistance,
  PowerExhausted,
  SearchSpaceTooLarge,
  NonPositivePower,
  ConfigError,
  IoError,
};

const char* to_string(ErrorCode code) noexcept;

// Every failure raised by the library carries one of the codes above so the
// C API can translate it without string matching.
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

}  // namespace hrris

#endif  // HRRIS_COMMON_ERROR_HPP
