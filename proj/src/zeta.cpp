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

#include "flagsynth/zeta.hpp"

#include <array>
#include <cmath>
#include <limits>

namespace flagsynth {
namespace {

// B_{2j} / (2j)! for j = 1..8.
constexpr std::array<double, 8> kBernoulliOverFactorial = {
    1.0 / 6.0 / 2.0,
    -1.0 / 30.0 / 24.0,
    1.0 / 42.0 / 720.0,
    -1.0 / 30.0 / 40320.0,
    5.0 / 66.0 / 3628800.0,
    -691.0 / 2730.0 / 479001600.0,
    7.0 / 6.0 / 87178291200.0,
    -3617.0 / 510.0 / 20922789888000.0,
};

// Shift point for the asymptotic tail.
constexpr double kTailStart = 16.0;

}  // namespace

double hurwitz_zeta(double s, double q) {
  if (!(s > 1.0) || !(q > 0.0)) {
    return std::numeric_limits<double>::quiet_NaN();
  }
  double sum = 0.0;
  double a = q;
  while (a < kTailStart) {
    sum += std::pow(a, -s);
    a += 1.0;
  }
  const double a_pow = std::pow(a, -s);
  sum += a * a_pow / (s - 1.0) + 0.5 * a_pow;

  // Term j carries s(s+1)...(s+2j-2) * a^(-s-2j+1).
  double rising = s;
  double a_term = a_pow / a;
  const double inv_a2 = 1.0 / (a * a);
  for (std::size_t j = 0; j < kBernoulliOverFactorial.size(); ++j) {
    const double term = kBernoulliOverFactorial[j] * rising * a_term;
    sum += term;
    if (std::abs(term) < std::abs(sum) * 1e-17) break;
    const double next = s + 2.0 * static_cast<double>(j) + 1.0;
    rising *= next * (next + 1.0);
    a_term *= inv_a2;
  }
  return sum;
}

}  // namespace flagsynth
