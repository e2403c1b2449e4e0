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

#include "flagsynth/error.hpp"

#include <sstream>

namespace flagsynth {

const char* error_code_name(ErrorCode code) {
  switch (code) {
    case ErrorCode::kIo: return "io";
    case ErrorCode::kParse: return "parse";
    case ErrorCode::kEmpty: return "empty";
    case ErrorCode::kDegenerate: return "degenerate";
    case ErrorCode::kIllegalBeta: return "illegal_beta";
    case ErrorCode::kCoverage: return "coverage";
    case ErrorCode::kConsistency: return "consistency";
    case ErrorCode::kParameter: return "parameter";
    case ErrorCode::kNumeric: return "numeric";
    case ErrorCode::kNoFeasibleFit: return "no_feasible_fit";
  }
  return "unknown";
}

namespace {

std::string illegal_beta_message(double beta, double beta_max) {
  std::ostringstream os;
  os.precision(17);
  os << "illegal beta " << beta << ": exceeds beta_max " << beta_max
     << " for this distribution and alpha";
  return os.str();
}

}  // namespace

IllegalBetaError::IllegalBetaError(double beta, double beta_max)
    : Error(ErrorCode::kIllegalBeta, illegal_beta_message(beta, beta_max)),
      beta_(beta),
      beta_max_(beta_max) {}

}  // namespace flagsynth
