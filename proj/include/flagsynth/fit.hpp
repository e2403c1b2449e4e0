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

#ifndef FLAGSYNTH_FIT_HPP_
#define FLAGSYNTH_FIT_HPP_

#include <cstddef>
#include <cstdint>
#include <vector>

#include "flagsynth/distribution.hpp"
#include "flagsynth/ingest.hpp"

namespace flagsynth {

// Real protected-attribute counts by profile size. Counts are real-valued so
// that model expectations can be fed back in as observations.
struct ObservedGroupDistribution {
  ProfileSizeDistribution parent;
  std::vector<double> flagged;  // indexed by size 0..k
  double total_flagged = 0.0;
  std::uint64_t excluded = 0;   // parent entities dropped for lack of coverage

  double fraction() const {
    return total_flagged / static_cast<double>(parent.total());
  }
};

// Throws kCoverage if some entity of `dist` has no attribute entry, unless
// `allow_partial` is set, in which case such entities are dropped from the
// parent distribution.
ObservedGroupDistribution observed_group_distribution(
    const ProfileSizeDistribution& dist, const AttributeTable& table,
    bool allow_partial = false);

// Builds an observation from explicit per-size counts (indexed by size).
// Throws kParameter if any count is negative or exceeds S(i).
ObservedGroupDistribution observed_from_counts(
    const ProfileSizeDistribution& dist, std::vector<double> flagged);

enum class BetaMode { kFixedToObservedFraction, kSearched };

const char* beta_mode_name(BetaMode mode);

struct FitOptions {
  BetaMode beta_mode = BetaMode::kFixedToObservedFraction;
  double alpha_min = 0.0;
  double alpha_max = 3.0;
  double alpha_step = 0.01;
  // Searched mode only; the grid is multiples of beta_step in
  // [beta_min, beta_max], further clipped to the legal range per alpha.
  double beta_min = 0.01;
  double beta_max = 1.0;
  double beta_step = 0.01;
  unsigned bins_per_decade = 10;
  bool record_surface = false;
};

struct SurfacePoint {
  double alpha = 0.0;
  double beta = 0.0;
  double objective = 0.0;
};

struct FitResult {
  double alpha = 0.0;
  double beta = 0.0;
  double objective = 0.0;
  BetaMode beta_mode = BetaMode::kFixedToObservedFraction;
  FitOptions grid;
  double beta_max_at_alpha = 0.0;
  double observed_fraction = 0.0;
  std::size_t cells_evaluated = 0;
  std::vector<SurfacePoint> surface;  // filled when record_surface is set
};

// Log-spaced bin of a profile size: floor(bins_per_decade * log10(size)).
std::size_t size_bin(std::size_t size, unsigned bins_per_decade);

// sum over size bins of (log(1 + expected B) - log(1 + observed flagged))^2,
// with expected B taken from a strict-mode MembershipModel at (alpha, beta).
double fit_objective(const ObservedGroupDistribution& observed, double alpha,
                     double beta, unsigned bins_per_decade = 10);

// Grid search over legal (alpha, beta). Ties resolve to the smallest alpha,
// then the smallest beta. Throws kDegenerate with fewer than two occupied
// bins, kNoFeasibleFit when no grid cell is legal.
FitResult fit_params(const ObservedGroupDistribution& observed,
                     const FitOptions& options = {});

}  // namespace flagsynth

#endif  // FLAGSYNTH_FIT_HPP_
