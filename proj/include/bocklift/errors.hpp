// Copyright 2026 the bocklift authors
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <stdexcept>
#include <string>

namespace bocklift {

enum class ErrorKind {
  kUsage,
  kParse,
  kValidation,
  kDimensionMismatch,
  kPrecondition,
  kNotACycle,
  kNotACocycle,
  kNotLogical,
  kLevelMismatch,
  kCapExceeded,
  kIllDefinedHomology,
  kHypothesisViolated,
  kPairingViolated,
  kNoLift,
  kNotFound,
  kInternal,
};

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, std::string message)
      : std::runtime_error(std::move(message)), kind_(kind) {}

  ErrorKind kind() const { return kind_; }

 private:
  ErrorKind kind_;
};

[[noreturn]] inline void fail(ErrorKind kind, const std::string& message) {
  throw Error(kind, message);
}

}  // namespace bocklift
