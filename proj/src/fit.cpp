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

#include "flagsynth/fit.hpp"

#include <cmath>
#include <limits>
#include <optional>
#include <sstream>

#include "flagsynth/error.hpp"
#include "flagsynth/flagcore.hpp"

namespace flagsynth {

ObservedGroupDistribution observed_group_distribution(
    const ProfileSizeDistribution& dist, const AttributeTable& table,
    bool allow_partial) {
  std::uint64_t missing = 0;
  std::string first_missing;
  for (const auto& e : dist.entities()) {
    if (!table.lookup(e.id)) {
      if (missing++ == 0) first_missing = e.id;
    }
  }
  if (missing > 0 && !allow_partial) {
    throw Error(ErrorCode::kCoverage,
                "attribute table '" + table.name() + "' is missing " +
                    std::to_string(missing) + " entities (first: '" +
                    first_missing + "')");
  }
  ProfileSizeDistribution parent =
      missing == 0 ? dist
                   : dist.filtered([&](const EntitySize& e) {
                       return table.lookup(e.id).has_value();
                     });
  std::vector<double> flagged(parent.k() + 1, 0.0);
  for (const auto& e : parent.entities()) {
    if (*table.lookup(e.id)) flagged[e.size] += 1.0;
  }
  auto observed = observed_from_counts(parent, std::move(flagged));
  observed.excluded = missing;
  return observed;
}

ObservedGroupDistribution observed_from_counts(
    const ProfileSizeDistribution& dist, std::vector<double> flagged) {
  flagged.resize(dist.k() + 1, 0.0);
  double total = 0.0;
  for (std::size_t i = 0; i < flagged.size(); ++i) {
    const double cap = static_cast<double>(dist.count(i));
    if (!(flagged[i] >= 0.0) || flagged[i] > cap * (1.0 + 1e-12)) {
      throw Error(ErrorCode::kParameter,
                  "flagged count at size " + std::to_string(i) +
                      " is outside [0, S(i)]");
    }
    total += flagged[i];
  }
  return ObservedGroupDistribution{dist, std::move(flagged), total, 0};
}

const char* beta_mode_name(BetaMode mode) {
  return mode == BetaMode::kFixedToObservedFraction
             ? "fixed_to_observed_fraction"
             : "searched";
}

std::size_t size_bin(std::size_t size, unsigned bins_per_decade) {
  return static_cast<std::size_t>(std::floor(
      bins_per_decade * std::log10(static_cast<double>(size)) + 1e-9));
}

namespace {

struct Bins {
  std::vector<std::size_t> of_size;  // indexed by size
  std::size_t count = 0;
  std::size_t occupied = 0;
};

Bins make_bins(const ProfileSizeDistribution& dist, unsigned bins_per_decade) {
  Bins bins;
  bins.of_size.assign(dist.k() + 1, 0);
  for (std::size_t i = 1; i <= dist.k(); ++i) {
    bins.of_size[i] = size_bin(i, bins_per_decade);
  }
  bins.count = bins.of_size.back() + 1;
  std::vector<bool> seen(bins.count, false);
  for (std::size_t i = 1; i <= dist.k(); ++i) {
    if (dist.count(i) > 0 && !seen[bins.of_size[i]]) {
      seen[bins.of_size[i]] = true;
      ++bins.occupied;
    }
  }
  return bins;
}

std::vector<double> bin_sums(const Bins& bins, std::span<const double> by_size) {
  std::vector<double> out(bins.count, 0.0);
  for (std::size_t i = 1; i < by_size.size(); ++i) {
    out[bins.of_size[i]] += by_size[i];
  }
  return out;
}

double binned_loss(std::span<const double> expected,
                   std::span<const double> observed) {
  double loss = 0.0;
  for (std::size_t b = 0; b < expected.size(); ++b) {
    const double d = std::log1p(expected[b]) - std::log1p(observed[b]);
    loss += d * d;
  }
  return loss;
}

// Number of grid intervals when `step` divides `span`; grid point j is
// lo + span * j / n, so halving the step reproduces every coarse point bit
// for bit.
std::size_t grid_intervals(double span, double step, const char* what) {
  if (!(step > 0.0) || !(span >= 0.0) || !std::isfinite(span)) {
    throw Error(ErrorCode::kParameter,
                std::string("invalid ") + what + " grid range or step");
  }
  const double n = std::round(span / step);
  if (std::abs(n * step - span) > 1e-9 * std::max(1.0, span)) {
    throw Error(ErrorCode::kParameter,
                std::string(what) + " step must divide its range evenly");
  }
  return static_cast<std::size_t>(n);
}

void validate(const FitOptions& o) {
  if (o.alpha_min < 0.0 || o.alpha_max < o.alpha_min) {
    throw Error(ErrorCode::kParameter, "alpha range must satisfy 0 <= min <= max");
  }
  if (o.bins_per_decade < 1) {
    throw Error(ErrorCode::kParameter, "bins_per_decade must be >= 1");
  }
  if (o.beta_mode == BetaMode::kSearched &&
      (!(o.beta_min > 0.0) || o.beta_max > 1.0 || o.beta_max < o.beta_min)) {
    throw Error(ErrorCode::kParameter,
                "beta range must satisfy 0 < min <= max <= 1");
  }
}

}  // namespace

double fit_objective(const ObservedGroupDistribution& observed, double alpha,
                     double beta, unsigned bins_per_decade) {
  const auto model =
      MembershipModel::build(observed.parent, {alpha, beta}, Legality::kStrict);
  std::vector<double> expected_b(observed.parent.k() + 1, 0.0);
  for (const auto& row : model.expected_counts()) {
    expected_b[row.size] = row.expected_b;
  }
  const Bins bins = make_bins(observed.parent, bins_per_decade);
  return binned_loss(bin_sums(bins, expected_b), bin_sums(bins, observed.flagged));
}

FitResult fit_params(const ObservedGroupDistribution& observed,
                     const FitOptions& options) {
  validate(options);
  const auto& dist = observed.parent;
  const Bins bins = make_bins(dist, options.bins_per_decade);
  if (bins.occupied < 2) {
    throw Error(ErrorCode::kDegenerate,
                "fit needs at least two occupied profile-size bins");
  }
  const std::vector<double> observed_bins = bin_sums(bins, observed.flagged);
  const double total = static_cast<double>(dist.total());

  const std::size_t alpha_n = grid_intervals(
      options.alpha_max - options.alpha_min, options.alpha_step, "alpha");
  std::size_t beta_denominator = 0;
  std::size_t beta_lo = 0;
  std::size_t beta_hi = 0;
  if (options.beta_mode == BetaMode::kSearched) {
    beta_denominator = grid_intervals(1.0, options.beta_step, "beta");
    beta_lo = static_cast<std::size_t>(
        std::ceil(options.beta_min * beta_denominator - 1e-9));
    beta_lo = std::max<std::size_t>(beta_lo, 1);
    beta_hi = static_cast<std::size_t>(
        std::floor(options.beta_max * beta_denominator + 1e-9));
  } else if (!(observed.fraction() > 0.0)) {
    throw Error(ErrorCode::kParameter,
                "observed flagged fraction is zero; beta must be positive");
  }

  FitResult result;
  result.beta_mode = options.beta_mode;
  result.grid = options;
  result.observed_fraction = observed.fraction();
  std::optional<SurfacePoint> best;
  std::ostringstream infeasible;
  infeasible.precision(6);

  std::vector<double> unscaled(dist.k() + 1, 0.0);
  std::vector<double> expected(bins.count, 0.0);
  for (std::size_t a = 0; a <= alpha_n; ++a) {
    const double alpha =
        alpha_n == 0 ? options.alpha_min
                     : options.alpha_min +
                           (options.alpha_max - options.alpha_min) *
                               static_cast<double>(a) /
                               static_cast<double>(alpha_n);
    const double mass = expected_group_b_mass(dist, alpha);
    const double limit = beta_max(dist, alpha);
    if (a % 10 == 0 || a == alpha_n) {
      infeasible << (a == 0 ? "" : ", ") << alpha << ":" << limit;
    }
    for (std::size_t i = 1; i <= dist.k(); ++i) {
      unscaled[i] = static_cast<double>(dist.count(i)) *
                    unscaled_membership(alpha, i);
    }
    const std::vector<double> unscaled_bins = bin_sums(bins, unscaled);

    auto evaluate = [&](double beta) {
      const double scale = beta * total / mass;
      for (std::size_t b = 0; b < bins.count; ++b) {
        expected[b] = scale * unscaled_bins[b];
      }
      const double loss = binned_loss(expected, observed_bins);
      ++result.cells_evaluated;
      if (options.record_surface) result.surface.push_back({alpha, beta, loss});
      if (!best || loss < best->objective) best = SurfacePoint{alpha, beta, loss};
    };

    if (options.beta_mode == BetaMode::kFixedToObservedFraction) {
      if (observed.fraction() <= limit) evaluate(observed.fraction());
    } else {
      for (std::size_t b = beta_lo; b <= beta_hi; ++b) {
        const double beta =
            static_cast<double>(b) / static_cast<double>(beta_denominator);
        if (beta > limit) break;
        evaluate(beta);
      }
    }
  }

  if (!best) {
    throw Error(ErrorCode::kNoFeasibleFit,
                "no legal (alpha, beta) in the requested grid; beta_max at "
                "alpha: " +
                    infeasible.str());
  }
  result.alpha = best->alpha;
  result.beta = best->beta;
  result.objective = best->objective;
  result.beta_max_at_alpha = beta_max(dist, best->alpha);
  return result;
}

}  // namespace flagsynth
