// Copyright 2026 the charsum authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <stdexcept>
#include <string>

namespace charsum {

enum class ErrorCode {
  NotPrime,
  ReducibleModulus,
  DegreeMismatch,
  DivisionByZero,
  FieldMismatch,
  DlogOfZero,
  NotASubfield,
  BoxOutOfRange,
  SingularBasis,
  TooLarge,
  TooLargeForOracle,
  MemoryBudgetExceeded,
  IsDthPower,
  NotGenerating,
  ZeroDivisor,
  ConditionNotMet,
  EpsOutOfRange,
  RTooSmall,
  HypothesisFailed,
  ConfigInvalid,
  AssertionFailed,
  IoFailure,
  Internal,
};

inline const char* error_code_name(ErrorCode c) {
  switch (c) {
    case ErrorCode::NotPrime: return "NotPrime";
    case ErrorCode::ReducibleModulus: return "ReducibleModulus";
    case ErrorCode::DegreeMismatch: return "DegreeMismatch";
    case ErrorCode::DivisionByZero: return "DivisionByZero";
    case ErrorCode::FieldMismatch: return "FieldMismatch";
    case ErrorCode::DlogOfZero: return "DlogOfZero";
    case ErrorCode::NotASubfield: return "NotASubfield";
    case ErrorCode::BoxOutOfRange: return "BoxOutOfRange";
    case ErrorCode::SingularBasis: return "SingularBasis";
    case ErrorCode::TooLarge: return "TooLarge";
    case ErrorCode::TooLargeForOracle: return "TooLargeForOracle";
    case ErrorCode::MemoryBudgetExceeded: return "MemoryBudgetExceeded";
    case ErrorCode::IsDthPower: return "IsDthPower";
    case ErrorCode::NotGenerating: return "NotGenerating";
    case ErrorCode::ZeroDivisor: return "ZeroDivisor";
    case ErrorCode::ConditionNotMet: return "ConditionNotMet";
    case ErrorCode::EpsOutOfRange: return "EpsOutOfRange";
    case ErrorCode::RTooSmall: return "RTooSmall";
    case ErrorCode::HypothesisFailed: return "HypothesisFailed";
    case ErrorCode::ConfigInvalid: return "ConfigInvalid";
    case ErrorCode::AssertionFailed: return "AssertionFailed";
    case ErrorCode::IoFailure: return "IoFailure";
    case ErrorCode::Internal: return "Internal";
  }
  return "Unknown";
}

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(std::string(error_code_name(code)) + ": " + what),
        code_(code) {}

  ErrorCode code() const { return code_; }

 private:
  ErrorCode code_;
};

[[noreturn]] inline void fail(ErrorCode code, const std::string& what) {
  throw Error(code, what);
}

}  // namespace charsum
