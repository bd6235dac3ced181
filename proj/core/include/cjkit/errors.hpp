// Copyright 2026 The cjkit Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <stdexcept>
#include <string>

namespace cjkit {

enum class ErrorCode {
  dimension_mismatch,
  non_hermitian,
  singular_input,
  not_faithful,
  margin_violation,
  not_psd,
  ref_mismatch,
  non_unital,
  non_invariant_reference,
  nondiagonal_reference,
  not_covariant,
  normalization_violation,
  truncation_violation,
  invalid_spin,
  invalid_argument,
  parse_error,
};

const char* error_code_name(ErrorCode code);

// Validation failures raised by the library. ParseError is the only
// subclass the CLI maps to a different exit code.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(std::string(error_code_name(code)) + ": " + message),
        code_(code) {}

  ErrorCode code() const { return code_; }

 private:
  ErrorCode code_;
};

class ParseError : public Error {
 public:
  explicit ParseError(const std::string& message)
      : Error(ErrorCode::parse_error, message) {}
};

inline const char* error_code_name(ErrorCode code) {
  switch (code) {
    case ErrorCode::dimension_mismatch: return "dimension-mismatch";
    case ErrorCode::non_hermitian: return "non-hermitian-input";
    case ErrorCode::singular_input: return "singular-input";
    case ErrorCode::not_faithful: return "not-faithful";
    case ErrorCode::margin_violation: return "margin-violation";
    case ErrorCode::not_psd: return "non-psd";
    case ErrorCode::ref_mismatch: return "ref-mismatch";
    case ErrorCode::non_unital: return "non-unital-input";
    case ErrorCode::non_invariant_reference: return "non-invariant-reference";
    case ErrorCode::nondiagonal_reference: return "nondiagonal-reference";
    case ErrorCode::not_covariant: return "not-covariant";
    case ErrorCode::normalization_violation: return "normalization-violation";
    case ErrorCode::truncation_violation: return "truncation-violation";
    case ErrorCode::invalid_spin: return "invalid-j";
    case ErrorCode::invalid_argument: return "invalid-argument";
    case ErrorCode::parse_error: return "parse-error";
  }
  return "unknown-error";
}

}  // namespace cjkit
