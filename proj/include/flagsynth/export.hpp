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

#ifndef FLAGSYNTH_EXPORT_HPP_
#define FLAGSYNTH_EXPORT_HPP_

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "flagsynth/assign.hpp"
#include "flagsynth/distribution.hpp"
#include "flagsynth/fit.hpp"
#include "flagsynth/flagcore.hpp"

// Text serializations of every artifact the CLI writes. Doubles are printed
// in shortest round-trip form so outputs are byte-stable.
namespace flagsynth::io {

std::string format_double(double v);

// size,count
std::string distribution_csv(const ProfileSizeDistribution& dist);
// size,log_size,log_count[,group_a,group_b]; zero counts are blank.
std::string loglog_csv(std::span<const LogLogRow> rows,
                       bool with_groups = false);

std::string powerlaw_fit_json(const PowerLawFit& fit);
std::string model_json(const MembershipModel& model);

// size,expected_a,expected_b,total,log_size,log_expected_a,log_expected_b,
// log_total, then a `#` footer with the group-B sum and beta*|U|.
std::string expected_csv(const MembershipModel& model);

// alpha,beta_max
struct BetaMaxRow {
  double alpha = 0.0;
  double beta_max = 0.0;
  double support_beta_max = 0.0;
};
std::string beta_max_csv(std::span<const BetaMaxRow> rows);

// entity_id,label
std::string labels_csv(const AttributeAssignment& assignment);
std::string assignment_json(const AttributeAssignment& assignment,
                            const RealizedStats& stats);
// Realized per-size counts in the log-log layout.
std::string realized_csv(const ProfileSizeDistribution& dist,
                         const RealizedStats& stats);

std::string fit_json(const FitResult& fit);
// alpha,beta,objective
std::string surface_csv(const FitResult& fit);

}  // namespace flagsynth::io

#endif  // FLAGSYNTH_EXPORT_HPP_
