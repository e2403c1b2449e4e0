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

#include "flagsynth/ingest.hpp"

#include <algorithm>
#include <set>
#include <string_view>
#include <unordered_map>
#include <unordered_set>

#include "flagsynth/error.hpp"

namespace flagsynth {
namespace {

std::vector<std::string_view> split(std::string_view line,
                                    std::string_view delim) {
  std::vector<std::string_view> fields;
  std::size_t start = 0;
  while (true) {
    const std::size_t pos = line.find(delim, start);
    if (pos == std::string_view::npos) {
      fields.push_back(line.substr(start));
      return fields;
    }
    fields.push_back(line.substr(start, pos - start));
    start = pos + delim.size();
  }
}

bool is_blank(std::string_view line) {
  return line.find_first_not_of(" \t") == std::string_view::npos;
}

// Yields (line number, line) with line endings normalised and blank lines
// skipped.
template <typename F>
void for_each_line(std::istream& in, F&& f) {
  std::string line;
  std::size_t number = 0;
  while (std::getline(in, line)) {
    ++number;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (is_blank(line)) continue;
    f(number, std::string_view(line));
  }
  if (in.bad()) throw Error(ErrorCode::kIo, "read error on input stream");
}

[[noreturn]] void parse_error(std::size_t line, const std::string& what) {
  throw Error(ErrorCode::kParse,
              "line " + std::to_string(line) + ": " + what);
}

}  // namespace

InteractionDataset::InteractionDataset(std::vector<Interaction> interactions,
                                       bool deduplicated)
    : interactions_(std::move(interactions)), deduplicated_(deduplicated) {
  for (const auto& it : interactions_) {
    if (it.entity.empty() || it.counterpart.empty()) {
      throw Error(ErrorCode::kParameter,
                  "interaction with an empty entity or counterpart id");
    }
  }
}

std::size_t InteractionDataset::distinct_entities() const {
  std::unordered_set<std::string_view> ids;
  for (const auto& it : interactions_) ids.insert(it.entity);
  return ids.size();
}

std::size_t InteractionDataset::distinct_counterparts() const {
  std::unordered_set<std::string_view> ids;
  for (const auto& it : interactions_) ids.insert(it.counterpart);
  return ids.size();
}

InteractionDataset InteractionDataset::deduplicate() const {
  std::set<std::pair<std::string_view, std::string_view>> seen;
  std::vector<Interaction> unique;
  for (const auto& it : interactions_) {
    if (seen.emplace(it.entity, it.counterpart).second) unique.push_back(it);
  }
  return InteractionDataset(std::move(unique), true);
}

InteractionDataset InteractionDataset::swapped() const {
  std::vector<Interaction> out;
  out.reserve(interactions_.size());
  for (const auto& it : interactions_) {
    out.push_back({it.counterpart, it.entity});
  }
  return InteractionDataset(std::move(out), deduplicated_);
}

void AttributeTable::insert(const std::string& entity, bool flag) {
  if (entity.empty()) {
    throw Error(ErrorCode::kParse, "attribute entry with an empty entity id");
  }
  if (!entries_.emplace(entity, flag).second) {
    throw Error(ErrorCode::kParse, "duplicate attribute entry for '" + entity + "'");
  }
}

std::optional<bool> AttributeTable::lookup(const std::string& entity) const {
  auto it = entries_.find(entity);
  if (it == entries_.end()) return std::nullopt;
  return it->second;
}

std::size_t AttributeTable::flagged() const {
  return static_cast<std::size_t>(
      std::count_if(entries_.begin(), entries_.end(),
                    [](const auto& kv) { return kv.second; }));
}

InteractionDataset parse_movielens_ratings(std::istream& in) {
  std::vector<Interaction> out;
  for_each_line(in, [&](std::size_t n, std::string_view line) {
    const auto f = split(line, "::");
    if (f.size() != 4) parse_error(n, "expected 4 '::'-separated fields");
    if (f[0].empty() || f[1].empty()) parse_error(n, "empty user or movie id");
    out.push_back({std::string(f[0]), std::string(f[1])});
  });
  return InteractionDataset(std::move(out));
}

AttributeTable parse_movielens_users(std::istream& in) {
  AttributeTable table("gender=F");
  for_each_line(in, [&](std::size_t n, std::string_view line) {
    const auto f = split(line, "::");
    if (f.size() != 5) parse_error(n, "expected 5 '::'-separated fields");
    if (f[0].empty()) parse_error(n, "empty user id");
    if (f[1] != "F" && f[1] != "M") {
      parse_error(n, "unknown gender token '" + std::string(f[1]) + "'");
    }
    try {
      table.insert(std::string(f[0]), f[1] == "F");
    } catch (const Error& e) {
      parse_error(n, e.what());
    }
  });
  return table;
}

AttributeTable parse_movielens_movies(std::istream& in,
                                      const std::string& genre) {
  AttributeTable table("genre=" + genre);
  for_each_line(in, [&](std::size_t n, std::string_view line) {
    // Titles may contain single colons, so split on the first and last "::".
    const std::size_t first = line.find("::");
    const std::size_t last = line.rfind("::");
    if (first == std::string_view::npos || first == last) {
      parse_error(n, "expected MovieID::Title::Genres");
    }
    const std::string_view id = line.substr(0, first);
    const std::string_view genres = line.substr(last + 2);
    if (id.empty()) parse_error(n, "empty movie id");
    bool match = false;
    for (std::string_view g : split(genres, "|")) {
      if (g == genre) match = true;
    }
    try {
      table.insert(std::string(id), match);
    } catch (const Error& e) {
      parse_error(n, e.what());
    }
  });
  return table;
}

InteractionDataset parse_generic_interactions(std::istream& in,
                                              const CsvConfig& config) {
  if (config.entity_column == config.counterpart_column) {
    throw Error(ErrorCode::kParameter,
                "entity and counterpart columns must differ");
  }
  const std::string delim(1, config.delimiter);
  const std::size_t needed =
      std::max(config.entity_column, config.counterpart_column) + 1;
  std::vector<Interaction> out;
  bool header_pending = config.header;
  for_each_line(in, [&](std::size_t n, std::string_view line) {
    if (header_pending) {
      header_pending = false;
      return;
    }
    const auto f = split(line, delim);
    if (f.size() < needed) {
      parse_error(n, "row has " + std::to_string(f.size()) +
                         " fields, column " + std::to_string(needed - 1) +
                         " is missing");
    }
    const auto entity = f[config.entity_column];
    const auto counterpart = f[config.counterpart_column];
    if (entity.empty() || counterpart.empty()) {
      parse_error(n, "empty entity or counterpart field");
    }
    out.push_back({std::string(entity), std::string(counterpart)});
  });
  return InteractionDataset(std::move(out));
}

namespace {

std::optional<bool> parse_flag(std::string_view v) {
  if (v == "1" || v == "true" || v == "TRUE" || v == "True" || v == "B") {
    return true;
  }
  if (v == "0" || v == "false" || v == "FALSE" || v == "False" || v == "A") {
    return false;
  }
  return std::nullopt;
}

}  // namespace

AttributeTable parse_attribute_csv(std::istream& in, const std::string& name) {
  AttributeTable table(name);
  bool first = true;
  for_each_line(in, [&](std::size_t n, std::string_view line) {
    const auto f = split(line, ",");
    const bool was_first = first;
    first = false;
    if (f.size() != 2) parse_error(n, "expected entity_id,flag");
    const auto flag = parse_flag(f[1]);
    if (!flag) {
      if (was_first) return;  // header
      parse_error(n, "flag must be one of 0, 1, true, false, A, B");
    }
    try {
      table.insert(std::string(f[0]), *flag);
    } catch (const Error& e) {
      parse_error(n, e.what());
    }
  });
  return table;
}

void write_attribute_csv(const AttributeTable& table, std::ostream& out) {
  out << "entity_id,flag\n";
  for (const auto& [id, flag] : table.entries()) {
    out << id << ',' << (flag ? 1 : 0) << '\n';
  }
}

ProfileSizeDistribution build_profiles(const InteractionDataset& dataset,
                                       Pivot pivot,
                                       std::optional<std::size_t> max_size) {
  if (dataset.empty()) {
    throw Error(ErrorCode::kEmpty, "dataset has no interactions");
  }
  std::unordered_map<std::string_view, std::size_t> sizes;
  for (const auto& it : dataset.interactions()) {
    ++sizes[pivot == Pivot::kUser ? it.entity : it.counterpart];
  }
  std::vector<EntitySize> entities;
  entities.reserve(sizes.size());
  for (const auto& [id, size] : sizes) {
    if (max_size && size > *max_size) continue;
    entities.push_back({std::string(id), size});
  }
  if (entities.empty()) {
    throw Error(ErrorCode::kEmpty,
                "every entity was removed by the profile-size cap");
  }
  return ProfileSizeDistribution::from_entities(std::move(entities));
}

}  // namespace flagsynth
