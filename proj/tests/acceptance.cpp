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

// Acceptance suite. Prints one PASS/FAIL/SKIP line per criterion and exits
// nonzero if any criterion fails.

#include <sys/wait.h>
#include <unistd.h>

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <random>
#include <sstream>
#include <thread>
#include <string>
#include <vector>

#include "flagsynth/assign.hpp"
#include "flagsynth/distribution.hpp"
#include "flagsynth/error.hpp"
#include "flagsynth/fit.hpp"
#include "flagsynth/flagcore.hpp"
#include "flagsynth/ingest.hpp"

namespace fs = std::filesystem;
using namespace flagsynth;

namespace {

enum class Verdict { kPass, kFail, kSkip };

struct Outcome {
  Verdict verdict = Verdict::kFail;
  std::string detail;
};

Outcome pass(std::string detail) { return {Verdict::kPass, std::move(detail)}; }
Outcome fail(std::string detail) { return {Verdict::kFail, std::move(detail)}; }

std::string fmt(const char* format, double a, double b = 0.0, double c = 0.0) {
  char buf[256];
  std::snprintf(buf, sizeof buf, format, a, b, c);
  return buf;
}

// Random distribution: k in 1..50, S(j) in 0..1000, S(k) > 0.
ProfileSizeDistribution random_distribution(std::mt19937_64& rng) {
  std::uniform_int_distribution<std::size_t> k_of(1, 50);
  std::uniform_int_distribution<std::uint64_t> count_of(0, 1000);
  std::vector<std::uint64_t> counts(k_of(rng));
  for (auto& c : counts) c = count_of(rng);
  if (counts.back() == 0) counts.back() = 1;
  return ProfileSizeDistribution::from_counts(counts);
}

ProfileSizeDistribution hand(std::uint64_t factor) {
  return ProfileSizeDistribution::from_counts(
      std::vector<std::uint64_t>{4 * factor, 2 * factor, 0, 1 * factor});
}

Outcome expectation_identity() {
  std::mt19937_64 rng(1);
  std::uniform_real_distribution<double> alpha_of(0.0, 3.0);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  double worst = 0.0;
  for (int trial = 0; trial < 1000; ++trial) {
    const auto dist = random_distribution(rng);
    const double alpha = alpha_of(rng);
    const double limit = std::min(1.0, beta_max(dist, alpha));
    const double beta = limit * (1.0 - unit(rng));  // (0, limit]
    const auto model = MembershipModel::build(dist, {alpha, beta});
    double sum = 0.0;
    for (std::size_t j = 1; j <= dist.k(); ++j) {
      sum += static_cast<double>(dist.count(j)) * model.probability(j);
    }
    const double target = beta * static_cast<double>(dist.total());
    worst = std::max(worst, std::abs(sum - target) / target);
  }
  const auto detail = fmt("1000 distributions, max relative error %.3g", worst);
  return worst <= 1e-9 ? pass(detail) : fail(detail);
}

Outcome legality_boundary() {
  std::mt19937_64 rng(2);
  std::uniform_real_distribution<double> alpha_of(0.0, 3.0);
  double worst = 0.0;
  int tested = 0;
  int rejected = 0;
  for (int trial = 0; trial < 1000; ++trial) {
    const auto dist = random_distribution(rng);
    const double alpha = alpha_of(rng);
    const double limit = beta_max(dist, alpha);
    // beta is capped at 1, so a boundary above 1 cannot be reached.
    if (limit * (1.0 + 1e-6) > 1.0) continue;
    ++tested;
    const auto model = MembershipModel::build(dist, {alpha, limit});
    worst = std::max(worst, std::abs(model.probability(1) - 1.0));
    try {
      MembershipModel::build(dist, {alpha, limit * (1.0 + 1e-6)});
    } catch (const IllegalBetaError&) {
      ++rejected;
    }
  }
  std::ostringstream os;
  os << tested << " distributions with beta_max < 1, max |p_1 - 1| = " << worst
     << ", " << rejected << " rejected above the boundary";
  const bool ok = tested > 0 && worst <= 1e-12 && rejected == tested;
  return ok ? pass(os.str()) : fail(os.str());
}

Outcome hand_oracle() {
  const auto dist = hand(1);
  const auto model = MembershipModel::build(dist, {1.0, 0.3});
  const double p[] = {0.4, 0.2, 0.3 * 7 / (3 * 5.25), 0.1};
  double worst = std::abs(model.beta_max() - 0.75);
  for (std::size_t j = 1; j <= 4; ++j) {
    worst = std::max(worst, std::abs(model.probability(j) - p[j - 1]));
  }
  const double expected_b[] = {1.6, 0.4, 0.0, 0.1};
  for (const auto& row : model.expected_counts()) {
    worst = std::max(worst, std::abs(row.expected_b - expected_b[row.size - 1]));
  }
  const auto detail = fmt("beta_max=%.15g p_1=%.15g max error %.3g",
                          model.beta_max(), model.probability(1), worst);
  return worst <= 1e-12 ? pass(detail) : fail(detail);
}

Outcome assignment_statistics() {
  const auto dist = hand(1000);
  const auto model = MembershipModel::build(dist, {1.0, 0.3});
  double variance = 0.0;
  for (std::size_t j = 1; j <= dist.k(); ++j) {
    const double p = model.probability(j);
    variance += static_cast<double>(dist.count(j)) * p * (1.0 - p);
  }
  const double sigma = std::sqrt(variance);
  const auto single = realized_stats(assign_labels(model, dist, 1179402567), dist);
  const double one = static_cast<double>(single.count_b);
  double mean = 0.0;
  for (std::uint64_t seed = 0; seed < 200; ++seed) {
    mean += static_cast<double>(realized_stats(assign_labels(model, dist, seed), dist).count_b);
  }
  mean /= 200.0;
  const bool ok = std::abs(one - 2100.0) <= 4.0 * sigma &&
                  std::abs(mean - 2100.0) <= 4.0 * sigma / std::sqrt(200.0);
  const auto detail =
      fmt("|B|=%.0f, mean over 200 seeds %.2f, sigma %.2f", one, mean, sigma);
  return ok ? pass(detail) : fail(detail);
}

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

Outcome determinism() {
  const fs::path dir = fs::temp_directory_path() /
                       ("flagsynth_acceptance_" + std::to_string(::getpid()));
  fs::remove_all(dir);
  fs::create_directories(dir);
  const auto sizes = sample_powerlaw(1.45, 200, 1, 20000, 5);
  {
    std::ofstream out(dir / "interactions.csv");
    out << "user,item\n";
    for (std::size_t i = 0; i < sizes.size(); ++i) {
      for (std::uint64_t j = 0; j < sizes[i]; ++j) out << 'u' << i << ",i" << j << '\n';
    }
  }
  const unsigned threads = std::max(2u, std::thread::hardware_concurrency());
  const auto run = [&](const std::string& name, unsigned n) {
    const std::string cmd = std::string("\"") + FLAGSYNTH_CLI_PATH +
                            "\" generate --format csv -i \"" +
                            (dir / "interactions.csv").string() +
                            "\" --alpha 1.2 --beta 0.25 --seed 4242 --threads " +
                            std::to_string(n) + " -o \"" + (dir / name).string() +
                            "\" >/dev/null";
    const int status = std::system(cmd.c_str());
    return WIFEXITED(status) && WEXITSTATUS(status) == 0;
  };
  const bool ran = run("a", 1) && run("b", 1) && run("c", threads);
  const auto a = slurp(dir / "a" / "labels.csv");
  const bool same = ran && !a.empty() && a == slurp(dir / "b" / "labels.csv") &&
                    a == slurp(dir / "c" / "labels.csv");
  fs::remove_all(dir);
  std::ostringstream os;
  os << "20000 entities, repeated run and " << threads << " threads vs 1: "
     << (ran ? (same ? "byte-identical" : "differ") : "cli failed");
  return same ? pass(os.str()) : fail(os.str());
}

Outcome estimator_recovery() {
  const double truths[] = {0.3, 1.45, 2.5};
  std::ostringstream os;
  bool ok = true;
  std::uint64_t seed = 600;
  for (double truth : truths) {
    const auto dist = ProfileSizeDistribution::from_sizes(
        sample_powerlaw(truth, 30, 1, 100000, seed++));
    const auto fit = estimate_powerlaw_alpha(dist);
    ok = ok && std::abs(fit.alpha - truth) <= 0.05;
    os << truth << "->" << fit.alpha << " ";
  }
  return ok ? pass(os.str()) : fail(os.str());
}

Outcome fit_round_trip() {
  const auto dist =
      ProfileSizeDistribution::from_sizes(sample_powerlaw(1.45, 1000, 1, 100000, 8080));
  const auto model = MembershipModel::build(dist, {0.8, 0.3});
  const auto stats = realized_stats(assign_labels(model, dist, 77), dist);
  const auto obs = observed_from_counts(
      dist, std::vector<double>(stats.per_size_b.begin(), stats.per_size_b.end()));
  FitOptions options;
  options.beta_mode = BetaMode::kSearched;
  const auto fit = fit_params(obs, options);
  const bool ok = std::abs(fit.alpha - 0.8) <= 0.1 && std::abs(fit.beta - 0.3) <= 0.05;
  const auto detail = fmt("planted (0.8, 0.3), fitted (%.4g, %.4g), objective %.4g",
                          fit.alpha, fit.beta, fit.objective);
  return ok ? pass(detail) : fail(detail);
}

Outcome uniform_limit() {
  std::mt19937_64 rng(8);
  bool exact = true;
  for (int trial = 0; trial < 100 && exact; ++trial) {
    const auto dist = random_distribution(rng);
    const double beta = std::uniform_real_distribution<double>(0.01, 1.0)(rng);
    const auto model = MembershipModel::build(dist, {0.0, beta});
    for (std::size_t j = 1; j <= dist.k(); ++j) exact = exact && model.probability(j) == beta;
  }
  const double beta = 0.37;
  const auto dist =
      ProfileSizeDistribution::from_sizes(sample_powerlaw(1.45, 500, 1, 100000, 9));
  const auto model = MembershipModel::build(dist, {0.0, beta});
  const auto stats = realized_stats(assign_labels(model, dist, 10, 4), dist);
  const double n = static_cast<double>(dist.total());
  const double fraction = static_cast<double>(stats.count_b) / n;
  const double sigma = std::sqrt(beta * (1.0 - beta) / n);
  const bool ok = exact && std::abs(fraction - beta) <= 4.0 * sigma;
  std::ostringstream os;
  os << "p_j == beta on 100 distributions: " << (exact ? "yes" : "no")
     << ", B fraction " << fraction << " vs " << beta << " (4 sigma " << 4 * sigma << ")";
  return ok ? pass(os.str()) : fail(os.str());
}

fs::path movielens_dir() {
  if (const char* env = std::getenv("FLAGSYNTH_ML1M_DIR")) return env;
  return fs::path(FLAGSYNTH_SOURCE_DIR) / "data" / "ml-1m";
}

double mean_size(const ProfileSizeDistribution& dist, const AttributeTable& table,
                 bool flag) {
  double sum = 0.0;
  double n = 0.0;
  for (const auto& e : dist.entities()) {
    if (table.lookup(e.id) == std::optional<bool>(flag)) {
      sum += static_cast<double>(e.size);
      n += 1.0;
    }
  }
  return n > 0 ? sum / n : 0.0;
}

Outcome movielens() {
  const auto dir = movielens_dir();
  for (const char* name : {"ratings.dat", "users.dat", "movies.dat"}) {
    if (!fs::exists(dir / name)) {
      return {Verdict::kSkip, "MovieLens 1M files not found in " + dir.string() +
                                  " (set FLAGSYNTH_ML1M_DIR)"};
    }
  }
  std::ifstream ratings_in(dir / "ratings.dat", std::ios::binary);
  std::ifstream users_in(dir / "users.dat", std::ios::binary);
  std::ifstream movies_in(dir / "movies.dat", std::ios::binary);
  const auto ratings = parse_movielens_ratings(ratings_in);
  const auto gender = parse_movielens_users(users_in);
  const auto documentary = parse_movielens_movies(movies_in, "Documentary");

  const auto users = build_profiles(ratings, Pivot::kUser);
  const auto movies = build_profiles(ratings, Pivot::kItem);
  const auto female = gender.flagged();
  const auto male = gender.size() - female;
  const double mean_f = mean_size(users, gender, true);
  const double mean_m = mean_size(users, gender, false);
  // movies.dat also lists titles nobody rated; only rated ones have profiles.
  std::size_t rated_documentaries = 0;
  for (const auto& e : movies.entities()) {
    if (documentary.lookup(e.id) == std::optional<bool>(true)) ++rated_documentaries;
  }

  std::ostringstream os;
  os << "F=" << female << " M=" << male << " Documentary=" << rated_documentaries
     << "/" << movies.total() << " rated movies, mean size M=" << mean_m
     << " F=" << mean_f;
  const bool ok = female == 1709 && male == 4331 && rated_documentaries == 110 &&
                  movies.total() == 3706 && std::abs(mean_m - 164.0) <= 1.0 &&
                  std::abs(mean_f - 144.0) <= 1.0;

  // Reported for comparison only.
  FitOptions options;
  options.beta_mode = BetaMode::kSearched;
  const auto user_obs = observed_group_distribution(users, gender);
  const auto user_fit = fit_params(user_obs, options);
  os << "; gender fit (" << user_fit.alpha << ", " << user_fit.beta << ") loss "
     << user_fit.objective << ", loss at (0.23, 0.34) ";
  try {
    os << fit_objective(user_obs, 0.23, 0.34);
  } catch (const Error& e) {
    os << "n/a (" << e.what() << ")";
  }
  const auto movie_obs = observed_group_distribution(movies, documentary, true);
  try {
    const auto movie_fit = fit_params(movie_obs, options);
    os << "; documentary fit (" << movie_fit.alpha << ", " << movie_fit.beta
       << ") loss " << movie_fit.objective;
  } catch (const Error& e) {
    os << "; documentary fit failed: " << e.what();
  }
  os << ", loss at (0.3, 0.10) ";
  try {
    os << fit_objective(movie_obs, 0.3, 0.10);
  } catch (const Error& e) {
    os << "n/a (" << e.what() << ")";
  }
  return ok ? pass(os.str()) : fail(os.str());
}

struct Criterion {
  int number;
  const char* name;
  double budget_seconds;  // 0 = no runtime limit
  std::function<Outcome()> check;
};

}  // namespace

int main() {
  const std::vector<Criterion> criteria = {
      {1, "expectation identity", 5.0, expectation_identity},
      {2, "legality boundary", 0.0, legality_boundary},
      {3, "hand oracle", 0.0, hand_oracle},
      {4, "assignment statistics", 10.0, assignment_statistics},
      {5, "determinism", 0.0, determinism},
      {6, "estimator recovery", 30.0, estimator_recovery},
      {7, "fit round trip", 60.0, fit_round_trip},
      {8, "uniform limit", 0.0, uniform_limit},
      {9, "MovieLens 1M ingestion", 0.0, movielens},
  };
  int failures = 0;
  for (const auto& c : criteria) {
    const auto start = std::chrono::steady_clock::now();
    Outcome outcome;
    try {
      outcome = c.check();
    } catch (const std::exception& e) {
      outcome = fail(std::string("exception: ") + e.what());
    }
    const double seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (outcome.verdict == Verdict::kPass && c.budget_seconds > 0 &&
        seconds > c.budget_seconds) {
      outcome.verdict = Verdict::kFail;
      outcome.detail += fmt(" (over the %.0f s budget)", c.budget_seconds);
    }
    const char* tag = outcome.verdict == Verdict::kPass   ? "PASS"
                      : outcome.verdict == Verdict::kSkip ? "SKIP"
                                                          : "FAIL";
    if (outcome.verdict == Verdict::kFail) ++failures;
    std::printf("%s criterion %d %s [%.2f s]: %s\n", tag, c.number, c.name, seconds,
                outcome.detail.c_str());
    std::fflush(stdout);
  }
  return failures == 0 ? 0 : 1;
}
