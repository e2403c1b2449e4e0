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

#include "flagsynth/distribution.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <random>
#include <sstream>

#include "flagsynth/error.hpp"
#include "flagsynth/zeta.hpp"

namespace flagsynth {

ProfileSizeDistribution ProfileSizeDistribution::from_entities(
    std::vector<EntitySize> entities) {
  if (entities.empty()) {
    throw Error(ErrorCode::kEmpty, "profile-size distribution has no entities");
  }
  std::sort(entities.begin(), entities.end(),
            [](const EntitySize& a, const EntitySize& b) { return a.id < b.id; });
  ProfileSizeDistribution dist;
  std::size_t k = 0;
  for (std::size_t i = 0; i < entities.size(); ++i) {
    if (entities[i].size == 0) {
      throw Error(ErrorCode::kParameter,
                  "entity '" + entities[i].id + "' has profile size 0");
    }
    if (i > 0 && entities[i].id == entities[i - 1].id) {
      throw Error(ErrorCode::kParameter,
                  "duplicate entity id '" + entities[i].id + "'");
    }
    k = std::max(k, entities[i].size);
  }
  dist.counts_.assign(k + 1, 0);
  for (const auto& e : entities) {
    ++dist.counts_[e.size];
    dist.interactions_ += e.size;
  }
  dist.entities_ = std::move(entities);
  return dist;
}

namespace {

// Zero-padded so that id order matches generation order.
std::string synthetic_id(std::size_t index, std::size_t total) {
  const std::size_t width = std::to_string(total > 0 ? total - 1 : 0).size();
  std::string id = std::to_string(index);
  return std::string(width - id.size(), '0') + id;
}

}  // namespace

ProfileSizeDistribution ProfileSizeDistribution::from_sizes(
    std::span<const std::size_t> sizes) {
  std::vector<EntitySize> entities;
  entities.reserve(sizes.size());
  for (std::size_t i = 0; i < sizes.size(); ++i) {
    entities.push_back({synthetic_id(i, sizes.size()), sizes[i]});
  }
  return from_entities(std::move(entities));
}

ProfileSizeDistribution ProfileSizeDistribution::from_counts(
    std::span<const std::uint64_t> counts_by_size) {
  std::size_t total = 0;
  for (auto c : counts_by_size) total += c;
  std::vector<EntitySize> entities;
  entities.reserve(total);
  std::size_t next = 0;
  for (std::size_t j = 0; j < counts_by_size.size(); ++j) {
    for (std::uint64_t c = 0; c < counts_by_size[j]; ++c) {
      entities.push_back({synthetic_id(next++, total), j + 1});
    }
  }
  return from_entities(std::move(entities));
}

std::size_t ProfileSizeDistribution::min_size() const noexcept {
  for (std::size_t i = 1; i < counts_.size(); ++i) {
    if (counts_[i] > 0) return i;
  }
  return 0;
}

const EntitySize* ProfileSizeDistribution::find(
    std::string_view id) const noexcept {
  auto it = std::lower_bound(
      entities_.begin(), entities_.end(), id,
      [](const EntitySize& e, std::string_view key) { return e.id < key; });
  if (it == entities_.end() || it->id != id) return nullptr;
  return &*it;
}

ProfileSizeDistribution ProfileSizeDistribution::filtered(
    const std::function<bool(const EntitySize&)>& keep) const {
  std::vector<EntitySize> kept;
  for (const auto& e : entities_) {
    if (keep(e)) kept.push_back(e);
  }
  return from_entities(std::move(kept));
}

Summary summarize(const ProfileSizeDistribution& dist) {
  Summary s;
  s.entities = dist.total();
  s.interactions = dist.total_interactions();
  s.max = dist.k();
  s.mean = static_cast<double>(s.interactions) / static_cast<double>(s.entities);
  const std::uint64_t median_rank = (s.entities - 1) / 2;
  std::uint64_t seen = 0;
  for (std::size_t i = 1; i <= dist.k(); ++i) {
    seen += dist.count(i);
    if (seen > median_rank) {
      s.median = i;
      break;
    }
  }
  return s;
}

const char* support_name(Support support) {
  return support == Support::kTruncated ? "truncated_at_k" : "infinite";
}

namespace {

constexpr double kGoldenTol = 1e-6;
constexpr double kAlphaUpper = 20.0;

// Maximizes a unimodal function on [lo, hi].
template <typename F>
double golden_section_max(F&& f, double lo, double hi, double tol) {
  const double inv_phi = (std::sqrt(5.0) - 1.0) / 2.0;
  double a = lo;
  double b = hi;
  double c = b - inv_phi * (b - a);
  double d = a + inv_phi * (b - a);
  double fc = f(c);
  double fd = f(d);
  while (b - a > tol) {
    if (fc >= fd) {
      b = d;
      d = c;
      fd = fc;
      c = b - inv_phi * (b - a);
      fc = f(c);
    } else {
      a = c;
      c = d;
      fc = fd;
      d = a + inv_phi * (b - a);
      fd = f(d);
    }
  }
  return 0.5 * (a + b);
}

struct Tail {
  std::size_t xmin = 1;
  std::size_t k = 1;
  std::uint64_t n = 0;
  double sum_log = 0.0;
  std::vector<double> log_size;  // log(i) for i = xmin..k
  std::span<const std::uint64_t> counts;
};

Tail make_tail(const ProfileSizeDistribution& dist, std::size_t xmin) {
  Tail t;
  t.xmin = xmin;
  t.k = dist.k();
  t.counts = dist.counts();
  std::size_t distinct = 0;
  for (std::size_t i = xmin; i <= t.k; ++i) {
    const double li = std::log(static_cast<double>(i));
    t.log_size.push_back(li);
    const auto c = dist.count(i);
    if (c > 0) {
      ++distinct;
      t.n += c;
      t.sum_log += static_cast<double>(c) * li;
    }
  }
  if (distinct < 2) {
    std::ostringstream os;
    os << "degenerate distribution: fewer than two distinct profile sizes at "
          "or above xmin="
       << xmin;
    throw Error(ErrorCode::kDegenerate, os.str());
  }
  return t;
}

double log_normalizer(const Tail& t, double alpha, Support support) {
  if (support == Support::kInfinite) {
    return std::log(hurwitz_zeta(alpha, static_cast<double>(t.xmin)));
  }
  double z = 0.0;
  for (double li : t.log_size) z += std::exp(-alpha * li);
  return std::log(z);
}

double log_likelihood(const Tail& t, double alpha, Support support) {
  return -alpha * t.sum_log -
         static_cast<double>(t.n) * log_normalizer(t, alpha, support);
}

double ks_distance(const Tail& t, double alpha, Support support) {
  const double log_z = log_normalizer(t, alpha, support);
  const double n = static_cast<double>(t.n);
  double emp = 0.0;
  double fit = 0.0;
  double worst = 0.0;
  for (std::size_t i = t.xmin; i <= t.k; ++i) {
    emp += static_cast<double>(t.counts[i]) / n;
    fit += std::exp(-alpha * t.log_size[i - t.xmin] - log_z);
    worst = std::max(worst, std::abs(emp - fit));
  }
  return std::min(worst, 1.0);
}

PowerLawFit fit_at(const ProfileSizeDistribution& dist, std::size_t xmin,
                   Support support) {
  const Tail tail = make_tail(dist, xmin);
  const double lo = support == Support::kInfinite ? 1.0 + 1e-6 : 1e-6;
  const double alpha = golden_section_max(
      [&](double a) { return log_likelihood(tail, a, support); }, lo,
      kAlphaUpper, kGoldenTol);
  const double ll = log_likelihood(tail, alpha, support);
  if (!std::isfinite(ll) || alpha > kAlphaUpper - 1e-4) {
    std::ostringstream os;
    os << "power-law MLE did not converge inside [" << lo << ", "
       << kAlphaUpper << "]: alpha=" << alpha << " loglik=" << ll
       << " xmin=" << xmin << " n_tail=" << tail.n;
    throw Error(ErrorCode::kNumeric, os.str());
  }
  PowerLawFit fit;
  fit.alpha = alpha;
  fit.xmin = xmin;
  fit.support = support;
  fit.n_tail = tail.n;
  fit.log_likelihood = ll;
  fit.ks_distance = ks_distance(tail, alpha, support);
  return fit;
}

}  // namespace

PowerLawFit estimate_powerlaw_alpha(const ProfileSizeDistribution& dist,
                                    const EstimateOptions& options) {
  if (!options.scan_xmin) {
    if (options.xmin < 1) {
      throw Error(ErrorCode::kParameter, "xmin must be at least 1");
    }
    return fit_at(dist, options.xmin, options.support);
  }
  std::vector<std::size_t> candidates;
  for (std::size_t i = 1; i <= dist.k(); ++i) {
    if (dist.count(i) > 0) candidates.push_back(i);
  }
  if (candidates.size() < 2) {
    throw Error(ErrorCode::kDegenerate,
                "degenerate distribution: a single distinct profile size");
  }
  candidates.pop_back();  // the largest size leaves a one-point tail
  std::optional<PowerLawFit> best;
  for (std::size_t xmin : candidates) {
    PowerLawFit fit;
    try {
      fit = fit_at(dist, xmin, options.support);
    } catch (const Error& e) {
      // Very short tails can push the optimum to the bracket edge.
      if (e.code() == ErrorCode::kNumeric) continue;
      throw;
    }
    if (!best || fit.ks_distance < best->ks_distance) best = fit;
  }
  if (!best) {
    throw Error(ErrorCode::kNumeric, "power-law MLE failed for every xmin");
  }
  return *best;
}

std::vector<double> powerlaw_pmf(double alpha, std::size_t xmin,
                                 std::size_t k) {
  if (!(alpha >= 0.0) || !std::isfinite(alpha) || xmin < 1 || xmin > k) {
    throw Error(ErrorCode::kParameter,
                "power-law table needs alpha >= 0 and 1 <= xmin <= k");
  }
  std::vector<double> pmf;
  pmf.reserve(k - xmin + 1);
  // Scale by xmin^alpha so the head is 1 and large alpha cannot underflow
  // the whole table.
  const double log_head = std::log(static_cast<double>(xmin));
  double z = 0.0;
  for (std::size_t i = xmin; i <= k; ++i) {
    const double w =
        std::exp(-alpha * (std::log(static_cast<double>(i)) - log_head));
    pmf.push_back(w);
    z += w;
  }
  for (double& p : pmf) p /= z;
  return pmf;
}

std::vector<std::size_t> sample_powerlaw(double alpha, std::size_t k,
                                         std::size_t xmin, std::size_t n,
                                         std::uint64_t seed) {
  if (n < 1) throw Error(ErrorCode::kParameter, "sample count must be >= 1");
  const std::vector<double> pmf = powerlaw_pmf(alpha, xmin, k);

  // Thresholds in units of 2^-53 against a 53-bit uniform integer draw.
  constexpr double kScale = 9007199254740992.0;  // 2^53
  constexpr std::uint64_t kTop = std::uint64_t{1} << 53;
  std::vector<std::uint64_t> thresholds(pmf.size());
  double cumulative = 0.0;
  for (std::size_t i = 0; i < pmf.size(); ++i) {
    cumulative += pmf[i];
    thresholds[i] = std::min<std::uint64_t>(
        static_cast<std::uint64_t>(cumulative * kScale), kTop);
  }
  thresholds.back() = kTop;

  std::mt19937_64 rng(seed);
  std::vector<std::size_t> out;
  out.reserve(n);
  for (std::size_t draw = 0; draw < n; ++draw) {
    const std::uint64_t r = rng() >> 11;
    const auto it = std::upper_bound(thresholds.begin(), thresholds.end(), r);
    out.push_back(xmin + static_cast<std::size_t>(it - thresholds.begin()));
  }
  return out;
}

std::vector<LogLogRow> loglog_points(
    const ProfileSizeDistribution& dist,
    std::optional<std::span<const double>> group_a,
    std::optional<std::span<const double>> group_b) {
  const bool groups = group_a.has_value() && group_b.has_value();
  auto log_or_blank = [](double v) -> std::optional<double> {
    if (v > 0.0) return std::log10(v);
    return std::nullopt;
  };
  auto at = [](std::span<const double> s, std::size_t i) {
    return i < s.size() ? s[i] : 0.0;
  };
  std::vector<LogLogRow> rows;
  rows.reserve(dist.k());
  for (std::size_t i = 1; i <= dist.k(); ++i) {
    LogLogRow row;
    row.size = i;
    row.log_size = std::log10(static_cast<double>(i));
    row.log_count = log_or_blank(static_cast<double>(dist.count(i)));
    if (groups) {
      row.log_group_a = log_or_blank(at(*group_a, i));
      row.log_group_b = log_or_blank(at(*group_b, i));
    }
    rows.push_back(row);
  }
  return rows;
}

}  // namespace flagsynth
