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

#include "flagsynth/assign.hpp"

#include <algorithm>
#include <thread>

#include "flagsynth/error.hpp"
#include "flagsynth/random.hpp"

namespace flagsynth {

AttributeAssignment assign_labels(const MembershipModel& model,
                                  const ProfileSizeDistribution& dist,
                                  std::uint64_t seed, unsigned threads) {
  const auto source = dist.entities();
  for (const auto& e : source) {
    if (e.size < 1 || e.size > model.k()) {
      throw Error(ErrorCode::kConsistency,
                  "entity '" + e.id + "' has size " + std::to_string(e.size) +
                      " outside the model support 1.." +
                      std::to_string(model.k()));
    }
  }

  AttributeAssignment out;
  out.seed = seed;
  out.params = model.params();
  out.legality = model.legality();
  out.entities.resize(source.size());

  const auto probabilities = model.probabilities();
  auto label_range = [&](std::size_t begin, std::size_t end) {
    for (std::size_t i = begin; i < end; ++i) {
      const auto& e = source[i];
      const bool in_b = entity_uniform(seed, e.id) < probabilities[e.size];
      out.entities[i] = {e.id, e.size, in_b ? Label::kB : Label::kA};
    }
  };

  const std::size_t n = source.size();
  const std::size_t workers =
      std::clamp<std::size_t>(threads, 1, std::max<std::size_t>(n, 1));
  if (workers == 1) {
    label_range(0, n);
    return out;
  }
  std::vector<std::jthread> pool;
  pool.reserve(workers);
  const std::size_t chunk = (n + workers - 1) / workers;
  for (std::size_t w = 0; w < workers; ++w) {
    const std::size_t begin = std::min(n, w * chunk);
    const std::size_t end = std::min(n, begin + chunk);
    pool.emplace_back(label_range, begin, end);
  }
  pool.clear();  // joins
  return out;
}

RealizedStats realized_stats(const AttributeAssignment& assignment,
                             const ProfileSizeDistribution& dist) {
  const auto source = dist.entities();
  if (assignment.entities.size() != source.size()) {
    throw Error(ErrorCode::kConsistency,
                "assignment has " + std::to_string(assignment.entities.size()) +
                    " entities, distribution has " +
                    std::to_string(source.size()));
  }
  RealizedStats stats;
  stats.per_size_a.assign(dist.k() + 1, 0);
  stats.per_size_b.assign(dist.k() + 1, 0);
  double sum_a = 0.0;
  double sum_b = 0.0;
  for (std::size_t i = 0; i < source.size(); ++i) {
    const auto& labeled = assignment.entities[i];
    if (labeled.id != source[i].id || labeled.size != source[i].size) {
      throw Error(ErrorCode::kConsistency,
                  "assignment entity '" + labeled.id +
                      "' does not match distribution entity '" +
                      source[i].id + "'");
    }
    if (labeled.label == Label::kB) {
      ++stats.count_b;
      ++stats.per_size_b[labeled.size];
      sum_b += static_cast<double>(labeled.size);
    } else {
      ++stats.count_a;
      ++stats.per_size_a[labeled.size];
      sum_a += static_cast<double>(labeled.size);
    }
  }
  if (stats.count_a > 0) stats.mean_size_a = sum_a / static_cast<double>(stats.count_a);
  if (stats.count_b > 0) stats.mean_size_b = sum_b / static_cast<double>(stats.count_b);
  return stats;
}

}  // namespace flagsynth
