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

#include "flagsynth/ingest.hpp"

#include <algorithm>
#include <random>
#include <sstream>

#include <gtest/gtest.h>

#include "flagsynth/error.hpp"

namespace flagsynth {
namespace {

ErrorCode code_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  ADD_FAILURE() << "expected an Error";
  return ErrorCode::kNumeric;
}

std::string message_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.what();
  }
  return "";
}

InteractionDataset ratings(const std::string& text) {
  std::istringstream in(text);
  return parse_movielens_ratings(in);
}

TEST(MovieLensRatingsTest, ParsesUserAndMovie) {
  const auto d = ratings("1::1193::5::978300760\n");
  ASSERT_EQ(d.size(), 1u);
  EXPECT_EQ(d.interactions()[0].entity, "1");
  EXPECT_EQ(d.interactions()[0].counterpart, "1193");
  EXPECT_EQ(d.distinct_entities(), 1u);
  EXPECT_EQ(d.distinct_counterparts(), 1u);
}

TEST(MovieLensRatingsTest, EmptyInputIsEmptyDataset) {
  const auto d = ratings("");
  EXPECT_TRUE(d.empty());
  EXPECT_EQ(code_of([&] { build_profiles(d, Pivot::kUser); }), ErrorCode::kEmpty);
}

TEST(MovieLensRatingsTest, MissingFieldsReportLine) {
  EXPECT_EQ(code_of([] { ratings("1::1193"); }), ErrorCode::kParse);
  EXPECT_NE(message_of([] { ratings("1::1193"); }).find("line 1"),
            std::string::npos);
  EXPECT_NE(message_of([] { ratings("1::2::3::4\r\n\n1::2::3\n"); })
                .find("line 3"),
            std::string::npos);
}

TEST(MovieLensUsersTest, GenderFlag) {
  std::istringstream in("1::F::1::10::48067\n2::M::56::16::70072\n");
  const auto t = parse_movielens_users(in);
  EXPECT_EQ(t.lookup("1"), std::optional<bool>(true));
  EXPECT_EQ(t.lookup("2"), std::optional<bool>(false));
  EXPECT_EQ(t.flagged(), 1u);
}

TEST(MovieLensUsersTest, RejectsUnknownGenderAndDuplicates) {
  std::istringstream bad("1::X::1::10::48067\n");
  EXPECT_EQ(code_of([&] { parse_movielens_users(bad); }), ErrorCode::kParse);
  std::istringstream dup("1::F::1::10::48067\n1::M::1::10::48067\n");
  EXPECT_EQ(code_of([&] { parse_movielens_users(dup); }), ErrorCode::kParse);
}

TEST(MovieLensMoviesTest, ExactGenreMatch) {
  std::istringstream in(
      "77::Nico Icon (1995)::Documentary\n"
      "1::Toy Story (1995)::Animation|Children's|Comedy\n"
      "9::Star Trek: Generations (1994)::Action|Documentary Drama\n");
  const auto t = parse_movielens_movies(in, "Documentary");
  EXPECT_EQ(t.lookup("77"), std::optional<bool>(true));
  EXPECT_EQ(t.lookup("1"), std::optional<bool>(false));
  EXPECT_EQ(t.lookup("9"), std::optional<bool>(false));
  EXPECT_EQ(t.size(), 3u);
}

TEST(MovieLensMoviesTest, MalformedLine) {
  std::istringstream in("77 Nico Icon Documentary\n");
  EXPECT_EQ(code_of([&] { parse_movielens_movies(in, "Documentary"); }),
            ErrorCode::kParse);
}

TEST(GenericInteractionsTest, HeaderAndSingleRow) {
  std::istringstream in("u,i\nu1,i9");
  const auto d = parse_generic_interactions(in);
  ASSERT_EQ(d.size(), 1u);
  EXPECT_EQ(d.interactions()[0].entity, "u1");
  EXPECT_EQ(d.interactions()[0].counterpart, "i9");
}

TEST(GenericInteractionsTest, SwappedColumnsTsv) {
  std::istringstream in("i9\tu1\n");
  CsvConfig config;
  config.delimiter = '\t';
  config.entity_column = 1;
  config.counterpart_column = 0;
  config.header = false;
  const auto d = parse_generic_interactions(in, config);
  ASSERT_EQ(d.size(), 1u);
  EXPECT_EQ(d.interactions()[0].entity, "u1");
  EXPECT_EQ(d.interactions()[0].counterpart, "i9");
}

TEST(GenericInteractionsTest, MissingCounterpartReportsRow) {
  std::istringstream in("u1,i1\nu2\n");
  CsvConfig config;
  config.header = false;
  const auto msg = message_of([&] { parse_generic_interactions(in, config); });
  EXPECT_NE(msg.find("line 2"), std::string::npos) << msg;
  std::istringstream empty_field("u,i\nu1,\n");
  EXPECT_EQ(code_of([&] { parse_generic_interactions(empty_field); }),
            ErrorCode::kParse);
}

TEST(AttributeCsvTest, RoundTripsThroughWriter) {
  std::istringstream in("entity_id,flag\na,1\nb,false\nc,true\n");
  const auto t = parse_attribute_csv(in, "x");
  EXPECT_EQ(t.size(), 3u);
  EXPECT_EQ(t.flagged(), 2u);
  std::ostringstream out;
  write_attribute_csv(t, out);
  EXPECT_EQ(out.str(), "entity_id,flag\na,1\nb,0\nc,1\n");
  std::istringstream again(out.str());
  EXPECT_EQ(parse_attribute_csv(again, "x").entries(), t.entries());
}

TEST(AttributeCsvTest, AcceptsGroupLabels) {
  std::istringstream in("entity_id,label\na,B\nb,A\n");
  const auto t = parse_attribute_csv(in, "x");
  EXPECT_EQ(t.lookup("a"), std::optional<bool>(true));
  EXPECT_EQ(t.lookup("b"), std::optional<bool>(false));
}

TEST(AttributeCsvTest, RejectsNonBinaryFlag) {
  std::istringstream in("a,1\nb,2\n");
  EXPECT_EQ(code_of([&] { parse_attribute_csv(in, "x"); }), ErrorCode::kParse);
}

InteractionDataset hand_dataset() {
  return InteractionDataset({{"u1", "a"}, {"u2", "a"}, {"u3", "a"}, {"u3", "b"}});
}

TEST(BuildProfilesTest, HandCount) {
  const auto s = build_profiles(hand_dataset(), Pivot::kUser);
  EXPECT_EQ(s.k(), 2u);
  EXPECT_EQ(s.count(1), 2u);
  EXPECT_EQ(s.count(2), 1u);
  EXPECT_EQ(s.total(), 3u);
  EXPECT_EQ(s.find("u3")->size, 2u);
}

TEST(BuildProfilesTest, CapRemovesLargeProfiles) {
  const auto s = build_profiles(hand_dataset(), Pivot::kUser, 1);
  EXPECT_EQ(s.k(), 1u);
  EXPECT_EQ(s.count(1), 2u);
  EXPECT_EQ(s.total(), 2u);
  EXPECT_EQ(s.find("u3"), nullptr);
  EXPECT_EQ(code_of([] {
              build_profiles(InteractionDataset({{"u", "a"}, {"u", "b"}}),
                             Pivot::kUser, 1);
            }),
            ErrorCode::kEmpty);
}

TEST(BuildProfilesTest, DuplicatesKeptUnlessDeduplicated) {
  const InteractionDataset d({{"u", "a"}, {"u", "a"}, {"u", "b"}});
  EXPECT_FALSE(d.deduplicated());
  EXPECT_EQ(build_profiles(d, Pivot::kUser).k(), 3u);
  const auto dd = d.deduplicate();
  EXPECT_TRUE(dd.deduplicated());
  EXPECT_EQ(build_profiles(dd, Pivot::kUser).k(), 2u);
}

TEST(BuildProfilesTest, EmptyIdsRejected) {
  EXPECT_EQ(code_of([] { InteractionDataset(std::vector<Interaction>{{"", "a"}}); }),
            ErrorCode::kParameter);
}

InteractionDataset random_dataset(std::mt19937_64& rng) {
  std::uniform_int_distribution<int> users(0, 40);
  std::uniform_int_distribution<int> items(0, 25);
  std::uniform_int_distribution<int> length(1, 300);
  std::vector<Interaction> rows;
  const int n = length(rng);
  for (int i = 0; i < n; ++i) {
    rows.push_back({"u" + std::to_string(users(rng)),
                    "i" + std::to_string(items(rng))});
  }
  return InteractionDataset(std::move(rows));
}

TEST(BuildProfilesProperty, CountsAreConsistent) {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 200; ++trial) {
    const auto d = random_dataset(rng);
    const auto s = build_profiles(d, Pivot::kUser);
    std::uint64_t entities = 0;
    std::uint64_t weighted = 0;
    for (std::size_t i = 1; i <= s.k(); ++i) {
      entities += s.count(i);
      weighted += i * s.count(i);
    }
    EXPECT_EQ(entities, d.distinct_entities());
    EXPECT_EQ(entities, s.total());
    EXPECT_EQ(weighted, d.size());
    EXPECT_GT(s.count(s.k()), 0u);
  }
}

TEST(BuildProfilesProperty, OrderIndependent) {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 100; ++trial) {
    const auto d = random_dataset(rng);
    auto rows = d.interactions();
    std::shuffle(rows.begin(), rows.end(), rng);
    EXPECT_EQ(build_profiles(d, Pivot::kUser),
              build_profiles(InteractionDataset(rows), Pivot::kUser));
  }
}

TEST(BuildProfilesProperty, ItemPivotEqualsSwappedUserPivot) {
  std::mt19937_64 rng(13);
  for (int trial = 0; trial < 100; ++trial) {
    const auto d = random_dataset(rng);
    EXPECT_EQ(build_profiles(d, Pivot::kItem),
              build_profiles(d.swapped(), Pivot::kUser));
  }
}

}  // namespace
}  // namespace flagsynth
