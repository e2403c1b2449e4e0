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

#ifndef FLAGSYNTH_FLAGCORE_HPP_
#define FLAGSYNTH_FLAGCORE_HPP_

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "flagsynth/distribution.hpp"

namespace flagsynth {

struct FlagParams {
  double alpha = 0.0;  // skew, >= 0
  double beta = 0.0;   // expected group-B fraction, in (0, 1]

  // Throws kParameter when out of range or non-finite.
  void validate() const;
};

enum class Legality { kStrict, kClamp };

const char* legality_name(Legality mode);

// j^-alpha. Equals 1 at j = 1 for every alpha.
double unscaled_membership(double alpha, std::size_t j);

// sum_i S(i) i^-alpha: the expected group-B size before scaling.
double expected_group_b_mass(const ProfileSizeDistribution& dist, double alpha);

// Largest legal beta, E_f(|B|) / |U|. Scaling by any beta up to this value
// keeps the size-1 probability at or below 1.
double beta_max(const ProfileSizeDistribution& dist, double alpha);

// Looser bound that only requires the smallest occupied size to stay at or
// below probability 1. Reported alongside beta_max when they differ.
double support_beta_max(const ProfileSizeDistribution& dist, double alpha);

struct ExpectedCount {
  std::size_t size = 0;
  double expected_b = 0.0;
  double expected_a = 0.0;
};

// Per-size group-B membership probabilities p_j = beta |U| / (j^alpha E_f),
// defined for every j in 1..k. Immutable once built.
class MembershipModel {
 public:
  // Strict mode throws IllegalBetaError when beta > beta_max. Clamp mode caps
  // each p_j at 1 and records that it did so.
  static MembershipModel build(const ProfileSizeDistribution& dist,
                               const FlagParams& params,
                               Legality mode = Legality::kStrict);

  const FlagParams& params() const noexcept { return params_; }
  Legality legality() const noexcept { return legality_; }
  std::size_t k() const noexcept { return probabilities_.size() - 1; }
  // p_j; j must be in 1..k.
  double probability(std::size_t j) const { return probabilities_.at(j); }
  // Indexed by size; element 0 is unused.
  std::span<const double> probabilities() const noexcept {
    return probabilities_;
  }
  double beta_max() const noexcept { return beta_max_; }
  std::uint64_t total() const noexcept { return total_; }
  // True when clamp mode had to cap at least one probability, so the
  // realised expectation is below beta |U|.
  bool clamped() const noexcept { return clamped_; }

  std::vector<ExpectedCount> expected_counts() const;
  double expected_group_b() const;

 private:
  MembershipModel() = default;

  FlagParams params_;
  Legality legality_ = Legality::kStrict;
  std::vector<double> probabilities_;
  std::vector<std::uint64_t> counts_;
  std::uint64_t total_ = 0;
  double beta_max_ = 0.0;
  bool clamped_ = false;
};

}  // namespace flagsynth

#endif  // FLAGSYNTH_FLAGCORE_HPP_
