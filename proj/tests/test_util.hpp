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

#ifndef FLAGSYNTH_TESTS_TEST_UTIL_HPP_
#define FLAGSYNTH_TESTS_TEST_UTIL_HPP_

#include <cstdint>
#include <vector>

#include "flagsynth/distribution.hpp"

namespace flagsynth::testing {

// S = {1: 4, 2: 2, 4: 1}, scaled by `factor`.
inline ProfileSizeDistribution hand_distribution(std::uint64_t factor = 1) {
  const std::vector<std::uint64_t> counts = {4 * factor, 2 * factor, 0,
                                             1 * factor};
  return ProfileSizeDistribution::from_counts(counts);
}

}  // namespace flagsynth::testing

#endif  // FLAGSYNTH_TESTS_TEST_UTIL_HPP_
