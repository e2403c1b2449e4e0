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

#include "flagsynth/export.hpp"

#include <array>
#include <charconv>
#include <cmath>
#include <sstream>

#include "json.hpp"

namespace flagsynth::io {
namespace {

using nlohmann::ordered_json;

std::string optional_field(const std::optional<double>& v) {
  return v ? format_double(*v) : std::string();
}

std::string log_or_blank(double v) {
  return v > 0.0 ? format_double(std::log10(v)) : std::string();
}

}  // namespace

std::string format_double(double v) {
  std::array<char, 32> buf{};
  auto [end, ec] = std::to_chars(buf.data(), buf.data() + buf.size(), v);
  return ec == std::errc() ? std::string(buf.data(), end) : std::string("nan");
}

std::string distribution_csv(const ProfileSizeDistribution& dist) {
  std::ostringstream os;
  os << "size,count\n";
  for (std::size_t i = 1; i <= dist.k(); ++i) {
    if (dist.count(i) > 0) os << i << ',' << dist.count(i) << '\n';
  }
  return os.str();
}

std::string loglog_csv(std::span<const LogLogRow> rows, bool with_groups) {
  std::ostringstream os;
  os << "size,log_size,log_count";
  if (with_groups) os << ",group_a,group_b";
  os << '\n';
  for (const auto& r : rows) {
    os << r.size << ',' << format_double(r.log_size) << ','
       << optional_field(r.log_count);
    if (with_groups) {
      os << ',' << optional_field(r.log_group_a) << ','
         << optional_field(r.log_group_b);
    }
    os << '\n';
  }
  return os.str();
}

std::string powerlaw_fit_json(const PowerLawFit& fit) {
  ordered_json j;
  j["alpha"] = fit.alpha;
  j["xmin"] = fit.xmin;
  j["ks"] = fit.ks_distance;
  j["support"] = support_name(fit.support);
  j["n_tail"] = fit.n_tail;
  j["log_likelihood"] = fit.log_likelihood;
  return j.dump(2) + "\n";
}

std::string model_json(const MembershipModel& model) {
  ordered_json j;
  j["alpha"] = model.params().alpha;
  j["beta"] = model.params().beta;
  j["legality_mode"] = legality_name(model.legality());
  j["k"] = model.k();
  j["beta_max"] = model.beta_max();
  j["clamped"] = model.clamped();
  const auto p = model.probabilities();
  j["probabilities"] = std::vector<double>(p.begin() + 1, p.end());
  return j.dump(2) + "\n";
}

std::string expected_csv(const MembershipModel& model) {
  std::ostringstream os;
  os << "size,expected_a,expected_b,total,log_size,log_expected_a,"
        "log_expected_b,log_total\n";
  double sum_b = 0.0;
  for (const auto& row : model.expected_counts()) {
    const double total = row.expected_a + row.expected_b;
    sum_b += row.expected_b;
    os << row.size << ',' << format_double(row.expected_a) << ','
       << format_double(row.expected_b) << ',' << format_double(total) << ','
       << format_double(std::log10(static_cast<double>(row.size))) << ','
       << log_or_blank(row.expected_a) << ',' << log_or_blank(row.expected_b)
       << ',' << log_or_blank(total) << '\n';
  }
  os << "# sum_expected_b=" << format_double(sum_b) << " beta_times_total="
     << format_double(model.params().beta * static_cast<double>(model.total()))
     << '\n';
  return os.str();
}

std::string beta_max_csv(std::span<const BetaMaxRow> rows) {
  std::ostringstream os;
  os << "alpha,beta_max,support_beta_max\n";
  for (const auto& r : rows) {
    os << format_double(r.alpha) << ',' << format_double(r.beta_max) << ','
       << format_double(r.support_beta_max) << '\n';
  }
  return os.str();
}

std::string labels_csv(const AttributeAssignment& assignment) {
  std::string out = "entity_id,label\n";
  for (const auto& e : assignment.entities) {
    out += e.id;
    out += ',';
    out += static_cast<char>(e.label);
    out += '\n';
  }
  return out;
}

std::string assignment_json(const AttributeAssignment& assignment,
                            const RealizedStats& stats) {
  ordered_json j;
  j["seed"] = assignment.seed;
  j["alpha"] = assignment.params.alpha;
  j["beta"] = assignment.params.beta;
  j["legality_mode"] = legality_name(assignment.legality);
  j["counts"] = {{"A", stats.count_a}, {"B", stats.count_b}};
  j["mean_size"] = {{"A", stats.mean_size_a}, {"B", stats.mean_size_b}};
  return j.dump(2) + "\n";
}

std::string realized_csv(const ProfileSizeDistribution& dist,
                         const RealizedStats& stats) {
  std::ostringstream os;
  os << "size,count,count_a,count_b,log_size,log_count,group_a,group_b\n";
  for (std::size_t i = 1; i <= dist.k(); ++i) {
    const auto a = stats.per_size_a[i];
    const auto b = stats.per_size_b[i];
    os << i << ',' << dist.count(i) << ',' << a << ',' << b << ','
       << format_double(std::log10(static_cast<double>(i))) << ','
       << log_or_blank(static_cast<double>(dist.count(i))) << ','
       << log_or_blank(static_cast<double>(a)) << ','
       << log_or_blank(static_cast<double>(b)) << '\n';
  }
  return os.str();
}

std::string fit_json(const FitResult& fit) {
  ordered_json j;
  j["alpha"] = fit.alpha;
  j["beta"] = fit.beta;
  j["objective"] = fit.objective;
  j["beta_mode"] = beta_mode_name(fit.beta_mode);
  ordered_json grid;
  grid["alpha_min"] = fit.grid.alpha_min;
  grid["alpha_max"] = fit.grid.alpha_max;
  grid["alpha_step"] = fit.grid.alpha_step;
  if (fit.beta_mode == BetaMode::kSearched) {
    grid["beta_min"] = fit.grid.beta_min;
    grid["beta_max"] = fit.grid.beta_max;
    grid["beta_step"] = fit.grid.beta_step;
  }
  grid["bins_per_decade"] = fit.grid.bins_per_decade;
  grid["cells_evaluated"] = fit.cells_evaluated;
  j["grid"] = grid;
  j["beta_max_at_alpha"] = fit.beta_max_at_alpha;
  j["observed_fraction"] = fit.observed_fraction;
  return j.dump(2) + "\n";
}

std::string surface_csv(const FitResult& fit) {
  std::ostringstream os;
  os << "alpha,beta,objective\n";
  for (const auto& p : fit.surface) {
    os << format_double(p.alpha) << ',' << format_double(p.beta) << ','
       << format_double(p.objective) << '\n';
  }
  return os.str();
}

}  // namespace flagsynth::io
