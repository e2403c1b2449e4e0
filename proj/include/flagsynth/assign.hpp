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

#ifndef FLAGSYNTH_ASSIGN_HPP_
#define FLAGSYNTH_ASSIGN_HPP_

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "flagsynth/distribution.hpp"
#include "flagsynth/flagcore.hpp"

namespace flagsynth {

enum class Label : char { kA = 'A', kB = 'B' };

struct LabeledEntity {
  std::string id;
  std::size_t size = 0;
  Label label = Label::kA;

  friend bool operator==(const LabeledEntity&, const LabeledEntity&) = default;
};

struct AttributeAssignment {
  std::vector<LabeledEntity> entities;  // same order as the distribution
  std::uint64_t seed = 0;
  FlagParams params;
  Legality legality = Legality::kStrict;
};

// One Bernoulli trial per entity: label B iff entity_uniform(seed, id) < p_size.
// Each entity owns its own substream, so the result does not depend on
// `threads` or on iteration order. Throws kConsistency when an entity size
// falls outside the model's support.
AttributeAssignment assign_labels(const MembershipModel& model,
                                  const ProfileSizeDistribution& dist,
                                  std::uint64_t seed, unsigned threads = 1);

struct RealizedStats {
  std::uint64_t count_a = 0;
  std::uint64_t count_b = 0;
  // Indexed by size 0..k.
  std::vector<std::uint64_t> per_size_a;
  std::vector<std::uint64_t> per_size_b;
  double mean_size_a = 0.0;  // 0 when the group is empty
  double mean_size_b = 0.0;

  friend bool operator==(const RealizedStats&, const RealizedStats&) = default;
};

// Throws kConsistency unless the assignment covers exactly the entities of
// `dist` with matching sizes.
RealizedStats realized_stats(const AttributeAssignment& assignment,
                             const ProfileSizeDistribution& dist);

}  // namespace flagsynth

#endif  // FLAGSYNTH_ASSIGN_HPP_
