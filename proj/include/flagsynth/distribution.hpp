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

#ifndef FLAGSYNTH_DISTRIBUTION_HPP_
#define FLAGSYNTH_DISTRIBUTION_HPP_

#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace flagsynth {

enum class Pivot { kUser, kItem };

struct EntitySize {
  std::string id;
  std::size_t size = 0;

  friend bool operator==(const EntitySize&, const EntitySize&) = default;
};

// S(i): number of entities with exactly i interactions, over support 1..k.
// Entities are kept sorted by id so every derived output has a canonical
// order.
class ProfileSizeDistribution {
 public:
  // Throws kEmpty when `entities` is empty, kParameter on a zero size or a
  // repeated id.
  static ProfileSizeDistribution from_entities(std::vector<EntitySize> entities);
  // Anonymous entities named by zero-padded index in input order.
  static ProfileSizeDistribution from_sizes(std::span<const std::size_t> sizes);
  // counts_by_size[j - 1] = S(j).
  static ProfileSizeDistribution from_counts(
      std::span<const std::uint64_t> counts_by_size);

  std::size_t k() const noexcept { return counts_.size() - 1; }
  std::uint64_t count(std::size_t size) const noexcept {
    return size < counts_.size() ? counts_[size] : 0;
  }
  // Indexed by size; element 0 is always zero.
  std::span<const std::uint64_t> counts() const noexcept { return counts_; }
  std::uint64_t total() const noexcept { return entities_.size(); }
  std::uint64_t total_interactions() const noexcept { return interactions_; }
  // Smallest size with a nonzero count.
  std::size_t min_size() const noexcept;
  std::span<const EntitySize> entities() const noexcept { return entities_; }
  const EntitySize* find(std::string_view id) const noexcept;

  // Entities for which `keep` holds. Throws kEmpty if none remain.
  ProfileSizeDistribution filtered(
      const std::function<bool(const EntitySize&)>& keep) const;

  friend bool operator==(const ProfileSizeDistribution&,
                         const ProfileSizeDistribution&) = default;

 private:
  ProfileSizeDistribution() = default;

  std::vector<std::uint64_t> counts_;
  std::vector<EntitySize> entities_;
  std::uint64_t interactions_ = 0;
};

struct Summary {
  double mean = 0.0;
  std::size_t median = 0;  // lower median
  std::size_t max = 0;
  std::uint64_t entities = 0;
  std::uint64_t interactions = 0;
};

Summary summarize(const ProfileSizeDistribution& dist);

enum class Support { kTruncated, kInfinite };

const char* support_name(Support support);

struct EstimateOptions {
  Support support = Support::kTruncated;
  // When set, xmin is chosen by minimum KS distance and `xmin` is ignored.
  bool scan_xmin = false;
  std::size_t xmin = 1;
};

struct PowerLawFit {
  double alpha = 0.0;
  std::size_t xmin = 1;
  double ks_distance = 0.0;
  Support support = Support::kTruncated;
  std::uint64_t n_tail = 0;
  double log_likelihood = 0.0;
};

// Discrete power-law maximum likelihood. Truncated support normalizes over
// xmin..k (k = largest observed size); infinite support uses the Hurwitz
// zeta function. Throws kDegenerate with fewer than two distinct sizes at or
// above xmin and kNumeric if the optimum runs into the search bracket's
// upper end.
PowerLawFit estimate_powerlaw_alpha(const ProfileSizeDistribution& dist,
                                    const EstimateOptions& options = {});

// Normalized P(i) for i = xmin..k, element 0 being P(xmin).
std::vector<double> powerlaw_pmf(double alpha, std::size_t xmin, std::size_t k);

// n i.i.d. draws with P(i) proportional to i^-alpha on xmin..k, by inverse
// CDF over an integer threshold table. The generator is std::mt19937_64, so a
// given seed reproduces the same draws.
std::vector<std::size_t> sample_powerlaw(double alpha, std::size_t k,
                                         std::size_t xmin, std::size_t n,
                                         std::uint64_t seed);

struct LogLogRow {
  std::size_t size = 0;
  double log_size = 0.0;
  std::optional<double> log_count;  // empty for a zero count
  std::optional<double> log_group_a;
  std::optional<double> log_group_b;
};

// One row per size 1..k. Group columns are filled when both spans are given;
// they are indexed by size like ProfileSizeDistribution::counts().
std::vector<LogLogRow> loglog_points(
    const ProfileSizeDistribution& dist,
    std::optional<std::span<const double>> group_a = std::nullopt,
    std::optional<std::span<const double>> group_b = std::nullopt);

}  // namespace flagsynth

#endif  // FLAGSYNTH_DISTRIBUTION_HPP_
