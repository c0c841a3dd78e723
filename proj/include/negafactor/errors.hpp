/*
   Copyright 2026 The negafactor authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#ifndef NEGAFACTOR_ERRORS_HPP
#define NEGAFACTOR_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace negafactor {

enum class ErrorCode {
  NotPrime,
  EvenCharacteristic,
  CapabilityExceeded,
  DivisionByZero,
  FieldMismatch,
  OrderNotDivisible,
  NoEmbedding,
  RootNotFound,
  ZeroElement,
  NotCoprime,
  MixedStructure,
  SubfieldProjectionFailure,
  InternalVerificationFailure,
  NotADivisor,
  IncompatibleLengths,
  InvalidArgument,
};

const char* error_code_name(ErrorCode code);

/// Single exception type for all domain errors; `code()` is the stable
/// machine-readable identity, `what()` carries context for humans.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(std::string(error_code_name(code)) + ": " + message),
        code_(code) {}

  ErrorCode code() const { return code_; }

 private:
  ErrorCode code_;
};

[[noreturn]] inline void fail(ErrorCode code, const std::string& message) {
  throw Error(code, message);
}

inline const char* error_code_name(ErrorCode code) {
  switch (code) {
    case ErrorCode::NotPrime: return "NotPrime";
    case ErrorCode::EvenCharacteristic: return "EvenCharacteristic";
    case ErrorCode::CapabilityExceeded: return "CapabilityExceeded";
    case ErrorCode::DivisionByZero: return "DivisionByZero";
    case ErrorCode::FieldMismatch: return "FieldMismatch";
    case ErrorCode::OrderNotDivisible: return "OrderNotDivisible";
    case ErrorCode::NoEmbedding: return "NoEmbedding";
    case ErrorCode::RootNotFound: return "RootNotFound";
    case ErrorCode::ZeroElement: return "ZeroElement";
    case ErrorCode::NotCoprime: return "NotCoprime";
    case ErrorCode::MixedStructure: return "MixedStructure";
    case ErrorCode::SubfieldProjectionFailure: return "SubfieldProjectionFailure";
    case ErrorCode::InternalVerificationFailure: return "InternalVerificationFailure";
    case ErrorCode::NotADivisor: return "NotADivisor";
    case ErrorCode::IncompatibleLengths: return "IncompatibleLengths";
    case ErrorCode::InvalidArgument: return "InvalidArgument";
  }
  return "Unknown";
}

}  // namespace negafactor

#endif  // NEGAFACTOR_ERRORS_HPP
