// Copyright 2026 The flagsynth Authors.
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

#ifndef FLAGSYNTH_ERROR_HPP_
#define FLAGSYNTH_ERROR_HPP_

#include <stdexcept>
#include <string>

namespace flagsynth {

enum class ErrorCode {
  kIo,
  kParse,
  kEmpty,
  kDegenerate,
  kIllegalBeta,
  kCoverage,
  kConsistency,
  kParameter,
  kNumeric,
  kNoFeasibleFit,
};

const char* error_code_name(ErrorCode code);

// All library failures are reported through this exception type. The code
// is stable and is what the C API and the CLI exit codes are derived from.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(message), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

// Raised by strict-mode model construction; carries the bound that was
// violated so callers can report it.
class IllegalBetaError : public Error {
 public:
  IllegalBetaError(double beta, double beta_max);

  double beta() const noexcept { return beta_; }
  double beta_max() const noexcept { return beta_max_; }

 private:
  double beta_;
  double beta_max_;
};

}  // namespace flagsynth

#endif  // FLAGSYNTH_ERROR_HPP_
