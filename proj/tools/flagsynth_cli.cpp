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

// flagsynth command-line tool. Everything goes through the C API in
// flagsynth.h; this file only handles options, reporting and file output.

#include <cerrno>
#include <charconv>
#include <cmath>
#include <cstdint>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <memory>
#include <optional>
#include <random>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "CLI11.hpp"
#include "flagsynth/flagsynth.h"

namespace fs = std::filesystem;

namespace {

constexpr std::uint64_t kDefaultSeed = 1179402567;  // 0x464C4147, "FLAG"

enum ExitCode : int {
  kExitOk = 0,
  kExitUsage = 1,
  kExitIo = 2,
  kExitDegenerate = 3,
  kExitIllegal = 4,
  kExitCoverage = 5,
};

// Carries a status out of the command body to main().
struct Failure {
  int exit_code;
  std::string message;
};

int exit_code_for(flagsynth_status status) {
  switch (status) {
    case FLAGSYNTH_ERR_IO:
    case FLAGSYNTH_ERR_PARSE:
      return kExitIo;
    case FLAGSYNTH_ERR_EMPTY:
    case FLAGSYNTH_ERR_DEGENERATE:
    case FLAGSYNTH_ERR_NUMERIC:
      return kExitDegenerate;
    case FLAGSYNTH_ERR_ILLEGAL_BETA:
    case FLAGSYNTH_ERR_PARAMETER:
    case FLAGSYNTH_ERR_NO_FEASIBLE_FIT:
      return kExitIllegal;
    case FLAGSYNTH_ERR_COVERAGE:
      return kExitCoverage;
    default:
      return kExitUsage;
  }
}

void check(flagsynth_status status) {
  if (status != FLAGSYNTH_OK) {
    throw Failure{exit_code_for(status),
                  std::string(flagsynth_status_string(status)) + ": " +
                      flagsynth_last_error()};
  }
}

template <typename T, void (*Free)(T*)>
struct Deleter {
  void operator()(T* p) const { Free(p); }
};

using Dataset = std::unique_ptr<flagsynth_dataset,
                                Deleter<flagsynth_dataset, flagsynth_dataset_free>>;
using Attributes =
    std::unique_ptr<flagsynth_attributes,
                    Deleter<flagsynth_attributes, flagsynth_attributes_free>>;
using Distribution =
    std::unique_ptr<flagsynth_distribution,
                    Deleter<flagsynth_distribution, flagsynth_distribution_free>>;
using Model = std::unique_ptr<flagsynth_model,
                              Deleter<flagsynth_model, flagsynth_model_free>>;
using Assignment =
    std::unique_ptr<flagsynth_assignment,
                    Deleter<flagsynth_assignment, flagsynth_assignment_free>>;
using FitResult = std::unique_ptr<flagsynth_fit_result,
                                  Deleter<flagsynth_fit_result, flagsynth_fit_free>>;

// Takes ownership of a string produced by the C API.
template <typename F>
std::string take_string(F&& produce) {
  char* raw = nullptr;
  check(produce(&raw));
  std::string out(raw);
  flagsynth_string_free(raw);
  return out;
}

struct Options {
  std::string input;
  std::string format = "csv";
  std::string pivot = "user";
  std::size_t max_size = 0;
  bool dedup = false;
  char delimiter = ',';
  std::size_t entity_col = 0;
  std::size_t counterpart_col = 1;
  bool no_header = false;
  std::optional<double> alpha;
  std::optional<double> beta;
  std::string seed;
  std::string legality = "strict";
  std::string out;
  unsigned threads = 1;

  // estimate
  std::string support = "truncated";
  bool scan_xmin = false;
  std::size_t xmin = 1;

  // check
  double sweep_from = 0.0;
  double sweep_to = 3.0;
  double sweep_step = 0.1;

  // fit
  std::string attributes;
  std::string attributes_format = "csv";
  std::string genre;
  std::string beta_mode = "fixed";
  double fit_alpha_min = 0.0;
  double fit_alpha_max = 3.0;
  double fit_alpha_step = 0.01;
  double fit_beta_min = 0.01;
  double fit_beta_max = 1.0;
  double fit_beta_step = 0.01;
  unsigned bins_per_decade = 10;
  bool surface = false;
  bool allow_partial = false;
};

// Pending output files. Nothing touches the output directory until every
// artifact has been produced; each file is then written to a temporary name
// and renamed into place.
class OutputSet {
 public:
  void add(std::string name, std::string content) {
    files_.emplace_back(std::move(name), std::move(content));
  }

  void commit(const fs::path& dir) const {
    std::error_code ec;
    fs::create_directories(dir, ec);
    if (ec) throw Failure{kExitIo, "cannot create '" + dir.string() + "': " + ec.message()};
    std::vector<std::pair<fs::path, fs::path>> staged;
    for (const auto& [name, content] : files_) {
      const fs::path final_path = dir / name;
      const fs::path temp_path = dir / ("." + name + ".tmp");
      std::ofstream out(temp_path, std::ios::binary | std::ios::trunc);
      out << content;
      out.close();
      if (!out) {
        for (const auto& s : staged) fs::remove(s.first, ec);
        fs::remove(temp_path, ec);
        throw Failure{kExitIo, "cannot write '" + temp_path.string() + "'"};
      }
      staged.emplace_back(temp_path, final_path);
    }
    for (const auto& [temp_path, final_path] : staged) {
      fs::rename(temp_path, final_path, ec);
      if (ec) {
        throw Failure{kExitIo, "cannot rename into '" + final_path.string() +
                                   "': " + ec.message()};
      }
    }
  }

 private:
  std::vector<std::pair<std::string, std::string>> files_;
};

std::uint64_t resolve_seed(const std::string& text) {
  if (text.empty()) return kDefaultSeed;
  if (text == "random") {
    std::random_device rd;
    return (static_cast<std::uint64_t>(rd()) << 32) ^ rd();
  }
  std::uint64_t value = 0;
  const char* first = text.data();
  const char* last = text.data() + text.size();
  int base = 10;
  if (text.size() > 2 && text[0] == '0' && (text[1] == 'x' || text[1] == 'X')) {
    first += 2;
    base = 16;
  }
  auto [ptr, ec] = std::from_chars(first, last, value, base);
  if (ec != std::errc() || ptr != last) {
    throw Failure{kExitIllegal, "seed must be an unsigned 64-bit integer or 'random', got '" +
                                    text + "'"};
  }
  return value;
}

void validate_alpha(const std::optional<double>& alpha, bool required) {
  if (!alpha) {
    if (required) throw Failure{kExitIllegal, "--alpha is required"};
    return;
  }
  if (!std::isfinite(*alpha) || *alpha < 0.0) {
    throw Failure{kExitIllegal, "--alpha must be finite and >= 0"};
  }
}

void validate_beta(const std::optional<double>& beta, bool required) {
  if (!beta) {
    if (required) throw Failure{kExitIllegal, "--beta is required"};
    return;
  }
  if (!std::isfinite(*beta) || *beta <= 0.0 || *beta > 1.0) {
    throw Failure{kExitIllegal, "--beta must lie in (0, 1]"};
  }
}

flagsynth_legality legality_of(const Options& o) {
  return o.legality == "clamp" ? FLAGSYNTH_LEGALITY_CLAMP : FLAGSYNTH_LEGALITY_STRICT;
}

Distribution load_distribution(const Options& o) {
  if (o.input.empty()) throw Failure{kExitUsage, "--input is required"};
  if (o.format == "ml1m-users" || o.format == "ml1m-movies") {
    throw Failure{kExitUsage, "--format " + o.format +
                                  " describes an attribute table; pass it to "
                                  "fit via --attributes/--attributes-format"};
  }
  const auto format = o.format == "ml1m-ratings" ? FLAGSYNTH_FORMAT_ML1M_RATINGS
                                                 : FLAGSYNTH_FORMAT_CSV;
  flagsynth_csv_config csv;
  flagsynth_csv_config_default(&csv);
  csv.delimiter = o.delimiter;
  csv.entity_column = o.entity_col;
  csv.counterpart_column = o.counterpart_col;
  csv.header = o.no_header ? 0 : 1;

  flagsynth_dataset* raw_dataset = nullptr;
  check(flagsynth_dataset_load(o.input.c_str(), format, &csv, o.dedup ? 1 : 0,
                               &raw_dataset));
  Dataset dataset(raw_dataset);
  flagsynth_distribution* raw_dist = nullptr;
  check(flagsynth_distribution_build(
      dataset.get(), o.pivot == "item" ? FLAGSYNTH_PIVOT_ITEM : FLAGSYNTH_PIVOT_USER,
      o.max_size, &raw_dist));
  return Distribution(raw_dist);
}

void emit(const Options& o, OutputSet& files, const std::string& name,
          const std::string& content) {
  if (o.out.empty()) {
    std::cout << content;
  } else {
    files.add(name, content);
  }
}

void run_stats(const Options& o) {
  auto dist = load_distribution(o);
  flagsynth_summary s{};
  check(flagsynth_distribution_summary(dist.get(), &s));
  const auto csv = take_string(
      [&](char** out) { return flagsynth_distribution_csv(dist.get(), out); });
  const auto loglog = take_string(
      [&](char** out) { return flagsynth_distribution_loglog_csv(dist.get(), out); });

  std::cout << "# entities=" << s.entities << "\n"
            << "# interactions=" << s.interactions << "\n"
            << "# k=" << s.max << "\n"
            << "# mean=" << s.mean << "\n"
            << "# median=" << s.median << "\n";
  OutputSet files;
  emit(o, files, "distribution.csv", csv);
  if (!o.out.empty()) {
    files.add("loglog.csv", loglog);
    files.commit(o.out);
  }
}

void run_estimate(const Options& o) {
  auto dist = load_distribution(o);
  const auto support = o.support == "infinite" ? FLAGSYNTH_SUPPORT_INFINITE
                                               : FLAGSYNTH_SUPPORT_TRUNCATED;
  flagsynth_powerlaw_fit fit{};
  check(flagsynth_estimate_alpha(dist.get(), support, o.scan_xmin ? 1 : 0,
                                 o.xmin, &fit));
  const auto json = take_string(
      [&](char** out) { return flagsynth_powerlaw_fit_json(&fit, out); });
  std::cout << json;
  if (!o.out.empty()) {
    OutputSet files;
    files.add("powerlaw_fit.json", json);
    files.commit(o.out);
  }
}

std::vector<double> sweep_points(const Options& o) {
  if (!(o.sweep_step > 0.0) || o.sweep_from < 0.0 || o.sweep_to < o.sweep_from) {
    throw Failure{kExitIllegal, "alpha sweep needs 0 <= from <= to and step > 0"};
  }
  const auto n = static_cast<std::size_t>(
      std::floor((o.sweep_to - o.sweep_from) / o.sweep_step + 1e-9));
  std::vector<double> alphas;
  for (std::size_t i = 0; i <= n; ++i) {
    // Snap to 12 decimals so printed sweep points read like the step.
    const double a = o.sweep_from + o.sweep_step * static_cast<double>(i);
    alphas.push_back(std::round(a * 1e12) / 1e12);
  }
  return alphas;
}

int run_check(const Options& o) {
  validate_alpha(o.alpha, false);
  validate_beta(o.beta, false);
  if (o.beta && !o.alpha) throw Failure{kExitUsage, "--beta needs --alpha"};
  const auto alphas = sweep_points(o);
  auto dist = load_distribution(o);
  const auto table = take_string([&](char** out) {
    return flagsynth_beta_max_csv(dist.get(), alphas.data(), alphas.size(), out);
  });

  int code = kExitOk;
  std::string verdict;
  if (o.alpha) {
    double limit = 0.0;
    double support_limit = 0.0;
    check(flagsynth_beta_max(dist.get(), *o.alpha, &limit));
    check(flagsynth_support_beta_max(dist.get(), *o.alpha, &support_limit));
    std::ostringstream os;
    os.precision(10);
    os << "# alpha=" << *o.alpha << " beta_max=" << limit << "\n";
    if (support_limit != limit) {
      os << "# note: smallest occupied profile size is above 1; beta up to "
         << support_limit
         << " would keep every occupied size at probability <= 1\n";
    }
    if (o.beta) {
      const bool legal = *o.beta <= limit;
      os << "# beta=" << *o.beta << " " << (legal ? "LEGAL" : "ILLEGAL") << "\n";
      if (!legal) code = kExitIllegal;
    }
    verdict = os.str();
  }
  std::cout << verdict;
  OutputSet files;
  emit(o, files, "legality.csv", table);
  if (!o.out.empty()) files.commit(o.out);
  return code;
}

Model build_model(const Options& o, const flagsynth_distribution* dist) {
  flagsynth_model* raw = nullptr;
  const auto status =
      flagsynth_model_build(dist, *o.alpha, *o.beta, legality_of(o), &raw);
  if (status == FLAGSYNTH_ERR_ILLEGAL_BETA) {
    double limit = 0.0;
    check(flagsynth_beta_max(dist, *o.alpha, &limit));
    std::ostringstream os;
    os.precision(10);
    os << "illegal beta " << *o.beta << " at alpha " << *o.alpha
       << ": beta_max=" << limit << " (use --legality clamp to cap probabilities)";
    throw Failure{kExitIllegal, os.str()};
  }
  check(status);
  Model model(raw);
  if (flagsynth_model_clamped(model.get())) {
    std::cerr << "warning: beta exceeds beta_max=" << flagsynth_model_beta_max(model.get())
              << "; probabilities were clamped at 1 and the expected group-B "
                 "size falls below beta*|U|\n";
  }
  return model;
}

void run_generate(const Options& o) {
  validate_alpha(o.alpha, true);
  validate_beta(o.beta, true);
  const std::uint64_t seed = resolve_seed(o.seed);
  auto dist = load_distribution(o);
  auto model = build_model(o, dist.get());

  flagsynth_assignment* raw = nullptr;
  check(flagsynth_assign(model.get(), dist.get(), seed, o.threads, &raw));
  Assignment assignment(raw);
  flagsynth_realized realized{};
  check(flagsynth_assignment_realized(assignment.get(), dist.get(), &realized));

  OutputSet files;
  files.add("labels.csv", take_string([&](char** out) {
              return flagsynth_assignment_labels_csv(assignment.get(), out);
            }));
  files.add("labels.json", take_string([&](char** out) {
              return flagsynth_assignment_json(assignment.get(), dist.get(), out);
            }));
  files.add("realized.csv", take_string([&](char** out) {
              return flagsynth_assignment_realized_csv(assignment.get(), dist.get(), out);
            }));
  files.commit(o.out.empty() ? fs::path(".") : fs::path(o.out));

  std::cout << "seed=" << seed << "\n"
            << "count_a=" << realized.count_a << "\n"
            << "count_b=" << realized.count_b << "\n"
            << "expected_b=" << flagsynth_model_expected_group_b(model.get()) << "\n"
            << "mean_size_a=" << realized.mean_size_a << "\n"
            << "mean_size_b=" << realized.mean_size_b << "\n";
}

void run_expected(const Options& o) {
  validate_alpha(o.alpha, true);
  validate_beta(o.beta, true);
  auto dist = load_distribution(o);
  auto model = build_model(o, dist.get());
  const auto csv = take_string(
      [&](char** out) { return flagsynth_model_expected_csv(model.get(), out); });
  OutputSet files;
  emit(o, files, "expected.csv", csv);
  if (!o.out.empty()) {
    files.add("model.json", take_string([&](char** out) {
                return flagsynth_model_json(model.get(), out);
              }));
    files.commit(o.out);
  }
}

void run_fit(const Options& o) {
  if (o.attributes.empty()) throw Failure{kExitUsage, "fit needs --attributes"};
  flagsynth_fit_options options;
  flagsynth_fit_options_default(&options);
  options.beta_mode =
      o.beta_mode == "searched" ? FLAGSYNTH_BETA_SEARCHED : FLAGSYNTH_BETA_FIXED;
  options.alpha_min = o.fit_alpha_min;
  options.alpha_max = o.fit_alpha_max;
  options.alpha_step = o.fit_alpha_step;
  options.beta_min = o.fit_beta_min;
  options.beta_max = o.fit_beta_max;
  options.beta_step = o.fit_beta_step;
  options.bins_per_decade = o.bins_per_decade;
  options.record_surface = o.surface ? 1 : 0;
  options.allow_partial = o.allow_partial ? 1 : 0;

  auto dist = load_distribution(o);
  flagsynth_attribute_format format = FLAGSYNTH_ATTR_CSV;
  if (o.attributes_format == "ml1m-users") format = FLAGSYNTH_ATTR_ML1M_USERS;
  if (o.attributes_format == "ml1m-movies") format = FLAGSYNTH_ATTR_ML1M_MOVIES;
  flagsynth_attributes* raw_attrs = nullptr;
  check(flagsynth_attributes_load(o.attributes.c_str(), format, o.genre.c_str(),
                                  &raw_attrs));
  Attributes attrs(raw_attrs);

  flagsynth_fit_result* raw_fit = nullptr;
  check(flagsynth_fit(dist.get(), attrs.get(), &options, &raw_fit));
  FitResult fit(raw_fit);
  if (flagsynth_fit_excluded(fit.get()) > 0) {
    std::cerr << "warning: " << flagsynth_fit_excluded(fit.get())
              << " entities without attribute entries were excluded\n";
  }
  const auto json =
      take_string([&](char** out) { return flagsynth_fit_json(fit.get(), out); });
  std::cout << json;
  if (!o.out.empty() || o.surface) {
    OutputSet files;
    files.add("fit.json", json);
    if (o.surface) {
      files.add("loss_surface.csv", take_string([&](char** out) {
                  return flagsynth_fit_surface_csv(fit.get(), out);
                }));
    }
    files.commit(o.out.empty() ? fs::path(".") : fs::path(o.out));
  }
}

void add_common_options(CLI::App& app, Options& o) {
  app.add_option("--input,-i", o.input, "Interaction file, '-' for stdin");
  app.add_option("--format", o.format, "Interaction file format")
      ->check(CLI::IsMember({"ml1m-ratings", "ml1m-users", "ml1m-movies", "csv"}));
  app.add_option("--pivot", o.pivot, "Count profiles per user or per item")
      ->check(CLI::IsMember({"user", "item"}));
  app.add_option("--max-size", o.max_size,
                 "Remove entities whose profile is larger than N (0 = no cap)");
  app.add_flag("--dedup", o.dedup, "Collapse repeated (entity, counterpart) pairs");
  app.add_option("--delimiter", o.delimiter, "CSV field delimiter");
  app.add_option("--entity-col", o.entity_col, "CSV entity column (0-based)");
  app.add_option("--counterpart-col", o.counterpart_col,
                 "CSV counterpart column (0-based)");
  app.add_flag("--no-header", o.no_header, "CSV input has no header row");
  app.add_option("--alpha", o.alpha, "Skew parameter (>= 0)");
  app.add_option("--beta", o.beta, "Expected group-B fraction in (0, 1]");
  app.add_option("--seed", o.seed, "Seed (unsigned integer) or 'random'")
      ->envname("FLAG_SYNTH_SEED");
  app.add_option("--legality", o.legality, "strict rejects beta > beta_max; clamp caps p at 1")
      ->check(CLI::IsMember({"strict", "clamp"}));
  app.add_option("--out,-o", o.out, "Output directory");
  app.add_option("--threads", o.threads, "Worker threads for generate")
      ->check(CLI::Range(1u, 1024u));
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Synthetic binary attributes linked to profile size"};
  app.set_config("--config", "", "key=value file; command-line flags take precedence");
  app.allow_config_extras(CLI::config_extras_mode::error);
  app.require_subcommand(1);
  Options o;
  add_common_options(app, o);

  auto* stats = app.add_subcommand("stats", "Profile-size distribution summary");
  auto* estimate = app.add_subcommand("estimate", "Power-law exponent of profile sizes");
  estimate->add_option("--support", o.support)
      ->check(CLI::IsMember({"truncated", "infinite"}));
  estimate->add_flag("--scan-xmin", o.scan_xmin, "Choose xmin by minimum KS distance");
  estimate->add_option("--xmin", o.xmin)->check(CLI::PositiveNumber);
  auto* check_cmd = app.add_subcommand("check", "beta_max over an alpha sweep");
  check_cmd->add_option("--from", o.sweep_from, "Sweep start alpha");
  check_cmd->add_option("--to", o.sweep_to, "Sweep end alpha");
  check_cmd->add_option("--step", o.sweep_step, "Sweep step");
  auto* generate = app.add_subcommand("generate", "Assign A/B labels");
  auto* fit = app.add_subcommand("fit", "Fit alpha and beta to a real attribute");
  fit->add_option("--attributes", o.attributes, "Attribute table path");
  fit->add_option("--attributes-format", o.attributes_format)
      ->check(CLI::IsMember({"ml1m-users", "ml1m-movies", "csv"}));
  fit->add_option("--genre", o.genre, "Genre flag for ml1m-movies");
  fit->add_option("--beta-mode", o.beta_mode)->check(CLI::IsMember({"fixed", "searched"}));
  fit->add_option("--alpha-min", o.fit_alpha_min);
  fit->add_option("--alpha-max", o.fit_alpha_max);
  fit->add_option("--alpha-step", o.fit_alpha_step);
  fit->add_option("--beta-min", o.fit_beta_min);
  fit->add_option("--beta-max", o.fit_beta_max);
  fit->add_option("--beta-step", o.fit_beta_step);
  fit->add_option("--bins-per-decade", o.bins_per_decade)->check(CLI::PositiveNumber);
  fit->add_flag("--surface", o.surface, "Also write loss_surface.csv");
  fit->add_flag("--allow-partial", o.allow_partial,
                "Exclude entities missing from the attribute table");
  auto* expected = app.add_subcommand("expected", "Expected per-size group counts");
  for (auto* sub : {stats, estimate, check_cmd, generate, fit, expected}) {
    sub->fallthrough();
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (*stats) run_stats(o);
    if (*estimate) run_estimate(o);
    if (*check_cmd) return run_check(o);
    if (*generate) run_generate(o);
    if (*fit) run_fit(o);
    if (*expected) run_expected(o);
  } catch (const Failure& f) {
    std::cerr << "flagsynth: " << f.message << "\n";
    return f.exit_code;
  } catch (const std::exception& e) {
    std::cerr << "flagsynth: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitOk;
}
