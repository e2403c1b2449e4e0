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

#include "flagsynth/flagcore.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "flagsynth/error.hpp"

namespace flagsynth {

void FlagParams::validate() const {
  if (!std::isfinite(alpha) || alpha < 0.0) {
    std::ostringstream os;
    os << "alpha must be finite and >= 0, got " << alpha;
    throw Error(ErrorCode::kParameter, os.str());
  }
  if (!std::isfinite(beta) || beta <= 0.0 || beta > 1.0) {
    std::ostringstream os;
    os << "beta must lie in (0, 1], got " << beta;
    throw Error(ErrorCode::kParameter, os.str());
  }
}

const char* legality_name(Legality mode) {
  return mode == Legality::kStrict ? "strict" : "clamp";
}

double unscaled_membership(double alpha, std::size_t j) {
  if (j == 1 || alpha == 0.0) return 1.0;
  return std::pow(static_cast<double>(j), -alpha);
}

double expected_group_b_mass(const ProfileSizeDistribution& dist,
                             double alpha) {
  double mass = 0.0;
  for (std::size_t i = 1; i <= dist.k(); ++i) {
    const auto c = dist.count(i);
    if (c > 0) mass += static_cast<double>(c) * unscaled_membership(alpha, i);
  }
  return mass;
}

double beta_max(const ProfileSizeDistribution& dist, double alpha) {
  return expected_group_b_mass(dist, alpha) / static_cast<double>(dist.total());
}

double support_beta_max(const ProfileSizeDistribution& dist, double alpha) {
  return beta_max(dist, alpha) / unscaled_membership(alpha, dist.min_size());
}

MembershipModel MembershipModel::build(const ProfileSizeDistribution& dist,
                                       const FlagParams& params,
                                       Legality mode) {
  params.validate();
  MembershipModel model;
  model.params_ = params;
  model.legality_ = mode;
  model.total_ = dist.total();
  model.counts_.assign(dist.counts().begin(), dist.counts().end());

  const double mass = expected_group_b_mass(dist, params.alpha);
  model.beta_max_ = mass / static_cast<double>(model.total_);
  if (mode == Legality::kStrict && params.beta > model.beta_max_) {
    throw IllegalBetaError(params.beta, model.beta_max_);
  }

  // At alpha = 0 the mass is exactly |U| and p_j is beta itself.
  const double scale =
      params.alpha == 0.0
          ? params.beta
          : params.beta * static_cast<double>(model.total_) / mass;
  model.probabilities_.assign(dist.k() + 1, 0.0);
  for (std::size_t j = 1; j <= dist.k(); ++j) {
    const double p = scale * unscaled_membership(params.alpha, j);
    // Strict mode can only exceed 1 by rounding at beta == beta_max.
    if (p > 1.0) {
      if (mode == Legality::kClamp && params.beta > model.beta_max_) {
        model.clamped_ = true;
      }
      model.probabilities_[j] = 1.0;
    } else {
      model.probabilities_[j] = p;
    }
  }
  return model;
}

std::vector<ExpectedCount> MembershipModel::expected_counts() const {
  std::vector<ExpectedCount> rows;
  rows.reserve(k());
  for (std::size_t j = 1; j <= k(); ++j) {
    const double s = static_cast<double>(counts_[j]);
    rows.push_back({j, s * probabilities_[j], s * (1.0 - probabilities_[j])});
  }
  return rows;
}

double MembershipModel::expected_group_b() const {
  double sum = 0.0;
  for (std::size_t j = 1; j <= k(); ++j) {
    sum += static_cast<double>(counts_[j]) * probabilities_[j];
  }
  return sum;
}

}  // namespace flagsynth
