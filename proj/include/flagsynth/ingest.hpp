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

#ifndef FLAGSYNTH_INGEST_HPP_
#define FLAGSYNTH_INGEST_HPP_

#include <cstddef>
#include <istream>
#include <map>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "flagsynth/distribution.hpp"

namespace flagsynth {

struct Interaction {
  std::string entity;
  std::string counterpart;

  friend auto operator<=>(const Interaction&, const Interaction&) = default;
};

// Raw interaction log. Repeated (entity, counterpart) pairs are kept unless
// the dataset has been deduplicated.
class InteractionDataset {
 public:
  InteractionDataset() = default;
  explicit InteractionDataset(std::vector<Interaction> interactions,
                              bool deduplicated = false);

  const std::vector<Interaction>& interactions() const noexcept {
    return interactions_;
  }
  std::size_t size() const noexcept { return interactions_.size(); }
  bool empty() const noexcept { return interactions_.empty(); }
  bool deduplicated() const noexcept { return deduplicated_; }

  std::size_t distinct_entities() const;
  std::size_t distinct_counterparts() const;

  // Collapses repeated pairs; keeps first-occurrence order.
  InteractionDataset deduplicate() const;
  // Entity and counterpart roles exchanged.
  InteractionDataset swapped() const;

 private:
  std::vector<Interaction> interactions_;
  bool deduplicated_ = false;
};

// Binary protected flag per entity.
class AttributeTable {
 public:
  explicit AttributeTable(std::string name) : name_(std::move(name)) {}

  // Throws kParse on a repeated id.
  void insert(const std::string& entity, bool flag);

  const std::string& name() const noexcept { return name_; }
  const std::map<std::string, bool>& entries() const noexcept {
    return entries_;
  }
  std::optional<bool> lookup(const std::string& entity) const;
  std::size_t size() const noexcept { return entries_.size(); }
  std::size_t flagged() const;

 private:
  std::string name_;
  std::map<std::string, bool> entries_;
};

// `UserID::MovieID::Rating::Timestamp`, one rating per line.
InteractionDataset parse_movielens_ratings(std::istream& in);

// `UserID::Gender::Age::Occupation::Zip`; flag is Gender == F.
AttributeTable parse_movielens_users(std::istream& in);

// `MovieID::Title::Genre1|Genre2|...`; flag is an exact genre match.
AttributeTable parse_movielens_movies(std::istream& in, const std::string& genre);

struct CsvConfig {
  char delimiter = ',';
  std::size_t entity_column = 0;
  std::size_t counterpart_column = 1;
  bool header = true;
};

InteractionDataset parse_generic_interactions(std::istream& in,
                                              const CsvConfig& config = {});

// Two-column `entity_id,flag` with flag in {0, 1, true, false}. Generated
// label files (`entity_id,label`, B = protected) are accepted too. A first
// line whose second field is not a flag value is treated as a header.
AttributeTable parse_attribute_csv(std::istream& in, const std::string& name);
void write_attribute_csv(const AttributeTable& table, std::ostream& out);

// S(i) over the chosen pivot. With `max_size`, entities above it are
// removed entirely. Throws kEmpty on an empty dataset or when the cap leaves
// nothing.
ProfileSizeDistribution build_profiles(
    const InteractionDataset& dataset, Pivot pivot,
    std::optional<std::size_t> max_size = std::nullopt);

}  // namespace flagsynth

#endif  // FLAGSYNTH_INGEST_HPP_
