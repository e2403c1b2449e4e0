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

#ifndef FLAGSYNTH_ZETA_HPP_
#define FLAGSYNTH_ZETA_HPP_

namespace flagsynth {

// Hurwitz zeta(s, q) = sum_{n>=0} (n + q)^-s for s > 1, q > 0.
// Direct summation of the leading terms followed by an Euler-Maclaurin tail
// with Bernoulli corrections through B_16; relative error is below 1e-12
// over the range the estimator uses.
double hurwitz_zeta(double s, double q);

}  // namespace flagsynth

#endif  // FLAGSYNTH_ZETA_HPP_
