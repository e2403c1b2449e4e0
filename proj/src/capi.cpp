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

#include "flagsynth/flagsynth.h"

#include <cmath>
#include <cstdlib>
#include <cstring>
#include <fstream>
#include <iostream>
#include <limits>
#include <new>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "flagsynth/assign.hpp"
#include "flagsynth/distribution.hpp"
#include "flagsynth/error.hpp"
#include "flagsynth/export.hpp"
#include "flagsynth/fit.hpp"
#include "flagsynth/flagcore.hpp"
#include "flagsynth/ingest.hpp"

struct flagsynth_dataset {
  flagsynth::InteractionDataset value;
};
struct flagsynth_attributes {
  flagsynth::AttributeTable value;
};
struct flagsynth_distribution {
  flagsynth::ProfileSizeDistribution value;
};
struct flagsynth_model {
  flagsynth::MembershipModel value;
};
struct flagsynth_assignment {
  flagsynth::AttributeAssignment value;
};
struct flagsynth_fit_result {
  flagsynth::FitResult value;
  std::uint64_t excluded = 0;
};

namespace {

using flagsynth::Error;
using flagsynth::ErrorCode;

thread_local std::string g_last_error;

flagsynth_status to_status(ErrorCode code) {
  switch (code) {
    case ErrorCode::kIo: return FLAGSYNTH_ERR_IO;
    case ErrorCode::kParse: return FLAGSYNTH_ERR_PARSE;
    case ErrorCode::kEmpty: return FLAGSYNTH_ERR_EMPTY;
    case ErrorCode::kDegenerate: return FLAGSYNTH_ERR_DEGENERATE;
    case ErrorCode::kIllegalBeta: return FLAGSYNTH_ERR_ILLEGAL_BETA;
    case ErrorCode::kCoverage: return FLAGSYNTH_ERR_COVERAGE;
    case ErrorCode::kConsistency: return FLAGSYNTH_ERR_CONSISTENCY;
    case ErrorCode::kParameter: return FLAGSYNTH_ERR_PARAMETER;
    case ErrorCode::kNumeric: return FLAGSYNTH_ERR_NUMERIC;
    case ErrorCode::kNoFeasibleFit: return FLAGSYNTH_ERR_NO_FEASIBLE_FIT;
  }
  return FLAGSYNTH_ERR_INTERNAL;
}

flagsynth_status fail(flagsynth_status status, std::string message) {
  g_last_error = std::move(message);
  return status;
}

// Runs `body`, translating exceptions into status codes.
template <typename F>
flagsynth_status guarded(F&& body) {
  try {
    body();
    g_last_error.clear();
    return FLAGSYNTH_OK;
  } catch (const Error& e) {
    return fail(to_status(e.code()), e.what());
  } catch (const std::bad_alloc&) {
    return fail(FLAGSYNTH_ERR_INTERNAL, "out of memory");
  } catch (const std::exception& e) {
    return fail(FLAGSYNTH_ERR_INTERNAL, e.what());
  }
}

flagsynth_status null_argument(const char* fn) {
  return fail(FLAGSYNTH_ERR_INVALID_ARGUMENT,
              std::string(fn) + ": null handle or output pointer");
}

char* dup_string(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (out == nullptr) throw std::bad_alloc();
  std::memcpy(out, s.data(), s.size() + 1);
  return out;
}

template <typename F>
flagsynth_status emit_string(char** out, F&& produce) {
  return guarded([&] { *out = dup_string(produce()); });
}

// Opens `path` ("-" for stdin) and hands the stream to `consume`.
template <typename F>
void with_input(const char* path, F&& consume) {
  if (std::strcmp(path, "-") == 0) {
    consume(std::cin);
    return;
  }
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    throw Error(ErrorCode::kIo, std::string("cannot open '") + path + "'");
  }
  consume(in);
}

flagsynth::CsvConfig to_config(const flagsynth_csv_config* csv) {
  flagsynth::CsvConfig config;
  if (csv != nullptr) {
    config.delimiter = csv->delimiter;
    config.entity_column = csv->entity_column;
    config.counterpart_column = csv->counterpart_column;
    config.header = csv->header != 0;
  }
  return config;
}

flagsynth::InteractionDataset read_dataset(std::istream& in,
                                           flagsynth_interaction_format format,
                                           const flagsynth_csv_config* csv,
                                           int dedup) {
  flagsynth::InteractionDataset d;
  switch (format) {
    case FLAGSYNTH_FORMAT_ML1M_RATINGS:
      d = flagsynth::parse_movielens_ratings(in);
      break;
    case FLAGSYNTH_FORMAT_CSV:
      d = flagsynth::parse_generic_interactions(in, to_config(csv));
      break;
    default:
      throw Error(ErrorCode::kParameter, "unknown interaction format");
  }
  return dedup != 0 ? d.deduplicate() : d;
}

flagsynth::AttributeTable read_attributes(std::istream& in,
                                          flagsynth_attribute_format format,
                                          const char* genre) {
  switch (format) {
    case FLAGSYNTH_ATTR_ML1M_USERS:
      return flagsynth::parse_movielens_users(in);
    case FLAGSYNTH_ATTR_ML1M_MOVIES:
      if (genre == nullptr || *genre == '\0') {
        throw Error(ErrorCode::kParameter, "movies attribute needs a genre");
      }
      return flagsynth::parse_movielens_movies(in, genre);
    case FLAGSYNTH_ATTR_CSV:
      return flagsynth::parse_attribute_csv(in, "flag");
  }
  throw Error(ErrorCode::kParameter, "unknown attribute format");
}

}  // namespace

extern "C" {

const char* flagsynth_version(void) { return "1.0.0"; }

const char* flagsynth_status_string(flagsynth_status status) {
  switch (status) {
    case FLAGSYNTH_OK: return "ok";
    case FLAGSYNTH_ERR_IO: return "io error";
    case FLAGSYNTH_ERR_PARSE: return "parse error";
    case FLAGSYNTH_ERR_EMPTY: return "empty input";
    case FLAGSYNTH_ERR_DEGENERATE: return "degenerate distribution";
    case FLAGSYNTH_ERR_ILLEGAL_BETA: return "illegal beta";
    case FLAGSYNTH_ERR_COVERAGE: return "attribute coverage error";
    case FLAGSYNTH_ERR_CONSISTENCY: return "consistency error";
    case FLAGSYNTH_ERR_PARAMETER: return "invalid parameter";
    case FLAGSYNTH_ERR_NUMERIC: return "numeric error";
    case FLAGSYNTH_ERR_NO_FEASIBLE_FIT: return "no feasible fit";
    case FLAGSYNTH_ERR_INVALID_ARGUMENT: return "invalid argument";
    case FLAGSYNTH_ERR_INTERNAL: return "internal error";
  }
  return "unknown status";
}

const char* flagsynth_last_error(void) { return g_last_error.c_str(); }

void flagsynth_string_free(char* s) { std::free(s); }

void flagsynth_csv_config_default(flagsynth_csv_config* config) {
  if (config == nullptr) return;
  const flagsynth::CsvConfig d;
  config->delimiter = d.delimiter;
  config->entity_column = d.entity_column;
  config->counterpart_column = d.counterpart_column;
  config->header = d.header ? 1 : 0;
}

// ---- datasets

flagsynth_status flagsynth_dataset_load(const char* path,
                                        flagsynth_interaction_format format,
                                        const flagsynth_csv_config* csv,
                                        int dedup, flagsynth_dataset** out) {
  if (path == nullptr || out == nullptr) return null_argument(__func__);
  return guarded([&] {
    with_input(path, [&](std::istream& in) {
      *out = new flagsynth_dataset{read_dataset(in, format, csv, dedup)};
    });
  });
}

flagsynth_status flagsynth_dataset_parse(const char* data, size_t length,
                                         flagsynth_interaction_format format,
                                         const flagsynth_csv_config* csv,
                                         int dedup, flagsynth_dataset** out) {
  if ((data == nullptr && length > 0) || out == nullptr) {
    return null_argument(__func__);
  }
  return guarded([&] {
    std::istringstream in(std::string(data == nullptr ? "" : data, length));
    *out = new flagsynth_dataset{read_dataset(in, format, csv, dedup)};
  });
}

size_t flagsynth_dataset_interactions(const flagsynth_dataset* d) {
  return d == nullptr ? 0 : d->value.size();
}

size_t flagsynth_dataset_entities(const flagsynth_dataset* d) {
  return d == nullptr ? 0 : d->value.distinct_entities();
}

size_t flagsynth_dataset_counterparts(const flagsynth_dataset* d) {
  return d == nullptr ? 0 : d->value.distinct_counterparts();
}

void flagsynth_dataset_free(flagsynth_dataset* d) { delete d; }

// ---- attributes

flagsynth_status flagsynth_attributes_load(const char* path,
                                           flagsynth_attribute_format format,
                                           const char* genre,
                                           flagsynth_attributes** out) {
  if (path == nullptr || out == nullptr) return null_argument(__func__);
  return guarded([&] {
    with_input(path, [&](std::istream& in) {
      *out = new flagsynth_attributes{read_attributes(in, format, genre)};
    });
  });
}

flagsynth_status flagsynth_attributes_parse(const char* data, size_t length,
                                            flagsynth_attribute_format format,
                                            const char* genre,
                                            flagsynth_attributes** out) {
  if ((data == nullptr && length > 0) || out == nullptr) {
    return null_argument(__func__);
  }
  return guarded([&] {
    std::istringstream in(std::string(data == nullptr ? "" : data, length));
    *out = new flagsynth_attributes{read_attributes(in, format, genre)};
  });
}

size_t flagsynth_attributes_size(const flagsynth_attributes* a) {
  return a == nullptr ? 0 : a->value.size();
}

size_t flagsynth_attributes_flagged(const flagsynth_attributes* a) {
  return a == nullptr ? 0 : a->value.flagged();
}

flagsynth_status flagsynth_attributes_csv(const flagsynth_attributes* a,
                                          char** out) {
  if (a == nullptr || out == nullptr) return null_argument(__func__);
  return emit_string(out, [&] {
    std::ostringstream os;
    flagsynth::write_attribute_csv(a->value, os);
    return os.str();
  });
}

void flagsynth_attributes_free(flagsynth_attributes* a) { delete a; }

// ---- distributions

flagsynth_status flagsynth_distribution_build(const flagsynth_dataset* d,
                                              flagsynth_pivot pivot,
                                              size_t max_size,
                                              flagsynth_distribution** out) {
  if (d == nullptr || out == nullptr) return null_argument(__func__);
  return guarded([&] {
    const auto p = pivot == FLAGSYNTH_PIVOT_ITEM ? flagsynth::Pivot::kItem
                                                 : flagsynth::Pivot::kUser;
    std::optional<std::size_t> cap;
    if (max_size > 0) cap = max_size;
    *out = new flagsynth_distribution{flagsynth::build_profiles(d->value, p, cap)};
  });
}

flagsynth_status flagsynth_distribution_from_counts(
    const uint64_t* counts, size_t k, flagsynth_distribution** out) {
  if ((counts == nullptr && k > 0) || out == nullptr) {
    return null_argument(__func__);
  }
  return guarded([&] {
    std::vector<std::uint64_t> c(counts, counts + k);
    *out = new flagsynth_distribution{
        flagsynth::ProfileSizeDistribution::from_counts(c)};
  });
}

flagsynth_status flagsynth_distribution_from_sizes(
    const uint64_t* sizes, size_t n, flagsynth_distribution** out) {
  if ((sizes == nullptr && n > 0) || out == nullptr) {
    return null_argument(__func__);
  }
  return guarded([&] {
    std::vector<std::size_t> s(sizes, sizes + n);
    *out = new flagsynth_distribution{
        flagsynth::ProfileSizeDistribution::from_sizes(s)};
  });
}

size_t flagsynth_distribution_k(const flagsynth_distribution* s) {
  return s == nullptr ? 0 : s->value.k();
}

uint64_t flagsynth_distribution_total(const flagsynth_distribution* s) {
  return s == nullptr ? 0 : s->value.total();
}

uint64_t flagsynth_distribution_count(const flagsynth_distribution* s,
                                      size_t size) {
  return s == nullptr ? 0 : s->value.count(size);
}

flagsynth_status flagsynth_distribution_summary(const flagsynth_distribution* s,
                                                flagsynth_summary* out) {
  if (s == nullptr || out == nullptr) return null_argument(__func__);
  return guarded([&] {
    const auto sum = flagsynth::summarize(s->value);
    *out = {sum.mean, sum.median, sum.max, sum.entities, sum.interactions};
  });
}

flagsynth_status flagsynth_distribution_csv(const flagsynth_distribution* s,
                                            char** out) {
  if (s == nullptr || out == nullptr) return null_argument(__func__);
  return emit_string(out, [&] { return flagsynth::io::distribution_csv(s->value); });
}

flagsynth_status flagsynth_distribution_loglog_csv(
    const flagsynth_distribution* s, char** out) {
  if (s == nullptr || out == nullptr) return null_argument(__func__);
  return emit_string(out, [&] {
    const auto rows = flagsynth::loglog_points(s->value);
    return flagsynth::io::loglog_csv(rows);
  });
}

void flagsynth_distribution_free(flagsynth_distribution* s) { delete s; }

// ---- estimation

flagsynth_status flagsynth_estimate_alpha(const flagsynth_distribution* s,
                                          flagsynth_support support,
                                          int scan_xmin, size_t xmin,
                                          flagsynth_powerlaw_fit* out) {
  if (s == nullptr || out == nullptr) return null_argument(__func__);
  return guarded([&] {
    flagsynth::EstimateOptions options;
    options.support = support == FLAGSYNTH_SUPPORT_INFINITE
                          ? flagsynth::Support::kInfinite
                          : flagsynth::Support::kTruncated;
    options.scan_xmin = scan_xmin != 0;
    options.xmin = xmin;
    const auto fit = flagsynth::estimate_powerlaw_alpha(s->value, options);
    *out = {fit.alpha, fit.xmin, fit.ks_distance, support, fit.n_tail,
            fit.log_likelihood};
  });
}

flagsynth_status flagsynth_powerlaw_fit_json(const flagsynth_powerlaw_fit* fit,
                                             char** out) {
  if (fit == nullptr || out == nullptr) return null_argument(__func__);
  return emit_string(out, [&] {
    flagsynth::PowerLawFit f;
    f.alpha = fit->alpha;
    f.xmin = fit->xmin;
    f.ks_distance = fit->ks_distance;
    f.support = fit->support == FLAGSYNTH_SUPPORT_INFINITE
                    ? flagsynth::Support::kInfinite
                    : flagsynth::Support::kTruncated;
    f.n_tail = fit->n_tail;
    f.log_likelihood = fit->log_likelihood;
    return flagsynth::io::powerlaw_fit_json(f);
  });
}

flagsynth_status flagsynth_sample_powerlaw(double alpha, size_t k, size_t xmin,
                                           size_t n, uint64_t seed,
                                           uint64_t* out) {
  if (out == nullptr) return null_argument(__func__);
  return guarded([&] {
    const auto draws = flagsynth::sample_powerlaw(alpha, k, xmin, n, seed);
    std::copy(draws.begin(), draws.end(), out);
  });
}

// ---- model

double flagsynth_unscaled_membership(double alpha, size_t j) {
  if (j < 1 || !(alpha >= 0.0)) return std::numeric_limits<double>::quiet_NaN();
  return flagsynth::unscaled_membership(alpha, j);
}

flagsynth_status flagsynth_expected_group_b_mass(const flagsynth_distribution* s,
                                                 double alpha, double* out) {
  if (s == nullptr || out == nullptr) return null_argument(__func__);
  return guarded([&] {
    flagsynth::FlagParams{alpha, 1.0}.validate();
    *out = flagsynth::expected_group_b_mass(s->value, alpha);
  });
}

flagsynth_status flagsynth_beta_max(const flagsynth_distribution* s,
                                    double alpha, double* out) {
  if (s == nullptr || out == nullptr) return null_argument(__func__);
  return guarded([&] {
    flagsynth::FlagParams{alpha, 1.0}.validate();
    *out = flagsynth::beta_max(s->value, alpha);
  });
}

flagsynth_status flagsynth_support_beta_max(const flagsynth_distribution* s,
                                            double alpha, double* out) {
  if (s == nullptr || out == nullptr) return null_argument(__func__);
  return guarded([&] {
    flagsynth::FlagParams{alpha, 1.0}.validate();
    *out = flagsynth::support_beta_max(s->value, alpha);
  });
}

flagsynth_status flagsynth_beta_max_csv(const flagsynth_distribution* s,
                                        const double* alphas, size_t n,
                                        char** out) {
  if (s == nullptr || (alphas == nullptr && n > 0) || out == nullptr) {
    return null_argument(__func__);
  }
  return emit_string(out, [&] {
    std::vector<flagsynth::io::BetaMaxRow> rows;
    for (size_t i = 0; i < n; ++i) {
      flagsynth::FlagParams{alphas[i], 1.0}.validate();
      rows.push_back({alphas[i], flagsynth::beta_max(s->value, alphas[i]),
                      flagsynth::support_beta_max(s->value, alphas[i])});
    }
    return flagsynth::io::beta_max_csv(rows);
  });
}

flagsynth_status flagsynth_model_build(const flagsynth_distribution* s,
                                       double alpha, double beta,
                                       flagsynth_legality legality,
                                       flagsynth_model** out) {
  if (s == nullptr || out == nullptr) return null_argument(__func__);
  return guarded([&] {
    const auto mode = legality == FLAGSYNTH_LEGALITY_CLAMP
                          ? flagsynth::Legality::kClamp
                          : flagsynth::Legality::kStrict;
    *out = new flagsynth_model{
        flagsynth::MembershipModel::build(s->value, {alpha, beta}, mode)};
  });
}

size_t flagsynth_model_k(const flagsynth_model* m) {
  return m == nullptr ? 0 : m->value.k();
}

double flagsynth_model_probability(const flagsynth_model* m, size_t j) {
  if (m == nullptr || j < 1 || j > m->value.k()) {
    return std::numeric_limits<double>::quiet_NaN();
  }
  return m->value.probability(j);
}

double flagsynth_model_beta_max(const flagsynth_model* m) {
  return m == nullptr ? std::numeric_limits<double>::quiet_NaN()
                      : m->value.beta_max();
}

int flagsynth_model_clamped(const flagsynth_model* m) {
  return m != nullptr && m->value.clamped() ? 1 : 0;
}

double flagsynth_model_expected_group_b(const flagsynth_model* m) {
  return m == nullptr ? std::numeric_limits<double>::quiet_NaN()
                      : m->value.expected_group_b();
}

size_t flagsynth_model_expected_counts(const flagsynth_model* m,
                                       flagsynth_expected_count* rows,
                                       size_t capacity) {
  if (m == nullptr) return 0;
  const auto counts = m->value.expected_counts();
  if (rows != nullptr) {
    for (size_t i = 0; i < counts.size() && i < capacity; ++i) {
      rows[i] = {counts[i].size, counts[i].expected_b, counts[i].expected_a};
    }
  }
  return counts.size();
}

flagsynth_status flagsynth_model_json(const flagsynth_model* m, char** out) {
  if (m == nullptr || out == nullptr) return null_argument(__func__);
  return emit_string(out, [&] { return flagsynth::io::model_json(m->value); });
}

flagsynth_status flagsynth_model_expected_csv(const flagsynth_model* m,
                                              char** out) {
  if (m == nullptr || out == nullptr) return null_argument(__func__);
  return emit_string(out, [&] { return flagsynth::io::expected_csv(m->value); });
}

void flagsynth_model_free(flagsynth_model* m) { delete m; }

// ---- assignment

flagsynth_status flagsynth_assign(const flagsynth_model* m,
                                  const flagsynth_distribution* s,
                                  uint64_t seed, unsigned threads,
                                  flagsynth_assignment** out) {
  if (m == nullptr || s == nullptr || out == nullptr) {
    return null_argument(__func__);
  }
  return guarded([&] {
    *out = new flagsynth_assignment{
        flagsynth::assign_labels(m->value, s->value, seed, threads)};
  });
}

size_t flagsynth_assignment_size(const flagsynth_assignment* a) {
  return a == nullptr ? 0 : a->value.entities.size();
}

char flagsynth_assignment_label(const flagsynth_assignment* a, size_t index) {
  if (a == nullptr || index >= a->value.entities.size()) return 0;
  return static_cast<char>(a->value.entities[index].label);
}

const char* flagsynth_assignment_entity(const flagsynth_assignment* a,
                                        size_t index) {
  if (a == nullptr || index >= a->value.entities.size()) return nullptr;
  return a->value.entities[index].id.c_str();
}

flagsynth_status flagsynth_assignment_realized(const flagsynth_assignment* a,
                                               const flagsynth_distribution* s,
                                               flagsynth_realized* out) {
  if (a == nullptr || s == nullptr || out == nullptr) {
    return null_argument(__func__);
  }
  return guarded([&] {
    const auto stats = flagsynth::realized_stats(a->value, s->value);
    *out = {stats.count_a, stats.count_b, stats.mean_size_a, stats.mean_size_b};
  });
}

flagsynth_status flagsynth_assignment_labels_csv(const flagsynth_assignment* a,
                                                 char** out) {
  if (a == nullptr || out == nullptr) return null_argument(__func__);
  return emit_string(out, [&] { return flagsynth::io::labels_csv(a->value); });
}

flagsynth_status flagsynth_assignment_json(const flagsynth_assignment* a,
                                           const flagsynth_distribution* s,
                                           char** out) {
  if (a == nullptr || s == nullptr || out == nullptr) {
    return null_argument(__func__);
  }
  return emit_string(out, [&] {
    return flagsynth::io::assignment_json(
        a->value, flagsynth::realized_stats(a->value, s->value));
  });
}

flagsynth_status flagsynth_assignment_realized_csv(
    const flagsynth_assignment* a, const flagsynth_distribution* s,
    char** out) {
  if (a == nullptr || s == nullptr || out == nullptr) {
    return null_argument(__func__);
  }
  return emit_string(out, [&] {
    return flagsynth::io::realized_csv(
        s->value, flagsynth::realized_stats(a->value, s->value));
  });
}

void flagsynth_assignment_free(flagsynth_assignment* a) { delete a; }

// ---- fitting

void flagsynth_fit_options_default(flagsynth_fit_options* o) {
  if (o == nullptr) return;
  const flagsynth::FitOptions d;
  o->beta_mode = FLAGSYNTH_BETA_FIXED;
  o->alpha_min = d.alpha_min;
  o->alpha_max = d.alpha_max;
  o->alpha_step = d.alpha_step;
  o->beta_min = d.beta_min;
  o->beta_max = d.beta_max;
  o->beta_step = d.beta_step;
  o->bins_per_decade = d.bins_per_decade;
  o->record_surface = 0;
  o->allow_partial = 0;
}

flagsynth_status flagsynth_fit(const flagsynth_distribution* s,
                               const flagsynth_attributes* attributes,
                               const flagsynth_fit_options* options,
                               flagsynth_fit_result** out) {
  if (s == nullptr || attributes == nullptr || out == nullptr) {
    return null_argument(__func__);
  }
  flagsynth_fit_options o;
  flagsynth_fit_options_default(&o);
  if (options != nullptr) o = *options;
  return guarded([&] {
    flagsynth::FitOptions fo;
    fo.beta_mode = o.beta_mode == FLAGSYNTH_BETA_SEARCHED
                       ? flagsynth::BetaMode::kSearched
                       : flagsynth::BetaMode::kFixedToObservedFraction;
    fo.alpha_min = o.alpha_min;
    fo.alpha_max = o.alpha_max;
    fo.alpha_step = o.alpha_step;
    fo.beta_min = o.beta_min;
    fo.beta_max = o.beta_max;
    fo.beta_step = o.beta_step;
    fo.bins_per_decade = o.bins_per_decade;
    fo.record_surface = o.record_surface != 0;
    const auto observed = flagsynth::observed_group_distribution(
        s->value, attributes->value, o.allow_partial != 0);
    *out = new flagsynth_fit_result{flagsynth::fit_params(observed, fo),
                                    observed.excluded};
  });
}

double flagsynth_fit_alpha(const flagsynth_fit_result* f) {
  return f == nullptr ? std::numeric_limits<double>::quiet_NaN() : f->value.alpha;
}

double flagsynth_fit_beta(const flagsynth_fit_result* f) {
  return f == nullptr ? std::numeric_limits<double>::quiet_NaN() : f->value.beta;
}

double flagsynth_fit_objective(const flagsynth_fit_result* f) {
  return f == nullptr ? std::numeric_limits<double>::quiet_NaN()
                      : f->value.objective;
}

double flagsynth_fit_observed_fraction(const flagsynth_fit_result* f) {
  return f == nullptr ? std::numeric_limits<double>::quiet_NaN()
                      : f->value.observed_fraction;
}

uint64_t flagsynth_fit_excluded(const flagsynth_fit_result* f) {
  return f == nullptr ? 0 : f->excluded;
}

flagsynth_status flagsynth_fit_json(const flagsynth_fit_result* f, char** out) {
  if (f == nullptr || out == nullptr) return null_argument(__func__);
  return emit_string(out, [&] { return flagsynth::io::fit_json(f->value); });
}

flagsynth_status flagsynth_fit_surface_csv(const flagsynth_fit_result* f,
                                           char** out) {
  if (f == nullptr || out == nullptr) return null_argument(__func__);
  return emit_string(out, [&] { return flagsynth::io::surface_csv(f->value); });
}

void flagsynth_fit_free(flagsynth_fit_result* f) { delete f; }

}  // extern "C"
