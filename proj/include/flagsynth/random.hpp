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

#ifndef FLAGSYNTH_RANDOM_HPP_
#define FLAGSYNTH_RANDOM_HPP_

#include <cstdint>
#include <string_view>

namespace flagsynth {

// 64-bit FNV-1a over the raw bytes of an entity id.
constexpr std::uint64_t fnv1a64(std::string_view bytes) noexcept {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : bytes) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  return h;
}

// SplitMix64 output function (Steele, Lea & Flood).
constexpr std::uint64_t splitmix64(std::uint64_t x) noexcept {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

// Top 53 bits as a double in [0, 1).
constexpr double to_unit_interval(std::uint64_t x) noexcept {
  return static_cast<double>(x >> 11) * 0x1.0p-53;
}

// First draw of the substream owned by `entity_id` under `seed`:
// splitmix64(splitmix64(seed) ^ fnv1a64(entity_id)), mapped to [0, 1).
constexpr double entity_uniform(std::uint64_t seed,
                                std::string_view entity_id) noexcept {
  return to_unit_interval(splitmix64(splitmix64(seed) ^ fnv1a64(entity_id)));
}

}  // namespace flagsynth

#endif  // FLAGSYNTH_RANDOM_HPP_
