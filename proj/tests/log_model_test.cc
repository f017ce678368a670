// Copyright 2026 The Libra Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     https://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "libra/log_model.h"

#include <algorithm>
#include <random>

#include "fixtures.h"
#include "gmock/gmock.h"
#include "gtest/gtest.h"
#include "libra/error.h"

namespace libra {
namespace {

using ::libra::testing::At;
using ::testing::ElementsAre;

TEST(TraceTest, RejectsInvalidTraces) {
  const Instant t = At(2021, 1, 1);
  EXPECT_THROW(Trace("c", {}), Error);
  EXPECT_THROW(Trace("c", {{"other", "A", t}}), Error);
  EXPECT_THROW(Trace("c", {{"c", "", t}}), Error);
  EXPECT_THROW(Trace("c", {{"c", "A", t + std::chrono::seconds(1)}, {"c", "B", t}}), Error);
}

TEST(EventLogTest, RejectsDuplicateCaseIds) {
  const Instant t = At(2021, 1, 1);
  EXPECT_THROW(EventLog({Trace("c", {{"c", "A", t}}), Trace("c", {{"c", "B", t}})}), Error);
}

TEST(EventLogTest, EpochIsMinimumTimestamp) {
  EXPECT_FALSE(EventLog{}.epoch().has_value());
  EXPECT_EQ(testing::HospitalLog().epoch(), At(2021, 4, 8, 10, 20));
}

TEST(ExtractVariantsTest, HospitalExcerpt) {
  const auto variants = ExtractVariants(testing::HospitalLog());
  ASSERT_EQ(variants.size(), 3u);
  // Frequency ties are ordered lexicographically: "Admission" < "Triage".
  EXPECT_EQ(variants[0], (TraceVariant{{"Registration", "Admission", "Surgery", "Release"}, 2}));
  EXPECT_EQ(variants[1], (TraceVariant{{"Registration", "Triage", "Admission"}, 2}));
  EXPECT_EQ(variants[2], (TraceVariant{{"Registration", "Antibiotics", "Release"}, 1}));
}

TEST(ExtractVariantsTest, EmptyLog) { EXPECT_TRUE(ExtractVariants(EventLog{}).empty()); }

TEST(ExtractVariantsTest, IdenticalTraces) {
  const EventLog log = testing::SyntheticLog({{{"A", "B"}, 17}}, 3);
  const auto variants = ExtractVariants(log);
  ASSERT_EQ(variants.size(), 1u);
  EXPECT_EQ(variants[0].frequency, 17u);
}

TEST(ExtractVariantsTest, ConservesFrequencyAndIgnoresTraceOrder) {
  const EventLog log = testing::LoopyLog();
  const auto variants = ExtractVariants(log);
  std::size_t total = 0;
  for (const auto& v : variants) total += v.frequency;
  EXPECT_EQ(total, log.size());

  std::vector<Trace> shuffled = log.traces();
  std::mt19937_64 gen(5);
  std::shuffle(shuffled.begin(), shuffled.end(), gen);
  EXPECT_EQ(ExtractVariants(EventLog(std::move(shuffled))), variants);
}

TEST(RelativeTraceTest, StartAtEpochIsZero) {
  const Trace t("c", {{"c", "A", At(2021, 1, 1)}});
  const RelativeTrace rel = ToRelative(t, At(2021, 1, 1));
  EXPECT_EQ(rel.relative_start_days, 0.0);
  EXPECT_TRUE(rel.cycle_times_minutes.empty());
}

TEST(RelativeTraceTest, HospitalCaseOne) {
  const EventLog log = testing::HospitalLog();
  const RelativeTrace rel = ToRelative(log.traces()[0], *log.epoch());
  EXPECT_EQ(rel.relative_start_days, 0.0);
  EXPECT_THAT(rel.cycle_times_minutes, ElementsAre(30.0, 325.0));
  EXPECT_EQ(FromRelative(rel, *log.epoch()), log.traces()[0]);
}

TEST(RelativeTraceTest, EpochAfterStart) {
  const Trace t("c", {{"c", "A", At(2021, 1, 1)}});
  try {
    ToRelative(t, At(2021, 1, 2));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kEpochAfterStart);
  }
}

TEST(RelativeTraceTest, ZeroCyclesShareOneTimestamp) {
  const RelativeTrace rel{"c", {"A", "B", "C"}, 1.5, {0.0, 0.0}};
  const Trace t = FromRelative(rel, At(2021, 1, 1));
  for (const Event& e : t.events()) EXPECT_EQ(e.timestamp, At(2021, 1, 2, 12));
}

TEST(RelativeTraceTest, RejectsNegativeComponents) {
  EXPECT_THROW(FromRelative({"c", {"A", "B"}, 0.0, {-1.0}}, At(2021, 1, 1)), Error);
  EXPECT_THROW(FromRelative({"c", {"A", "B"}, -0.1, {1.0}}, At(2021, 1, 1)), Error);
}

TEST(RelativeTraceTest, RoundTripProperty) {
  for (const EventLog& log : {testing::SepsisScaleLog(), testing::LoopyLog()}) {
    for (const Trace& t : log.traces()) {
      ASSERT_EQ(FromRelative(ToRelative(t, *log.epoch()), *log.epoch()), t);
    }
  }
}

TEST(RelativeTraceTest, FuzzedOffsetsGiveMonotoneTimestamps) {
  std::mt19937_64 gen(99);
  std::uniform_real_distribution<double> days(0.0, 400.0);
  std::exponential_distribution<double> minutes(0.01);
  std::uniform_int_distribution<int> length(1, 30);
  for (int i = 0; i < 2000; ++i) {
    RelativeTrace rel{"c", {}, days(gen), {}};
    const int n = length(gen);
    for (int k = 0; k < n; ++k) rel.variant.push_back("a" + std::to_string(k % 4));
    for (int k = 1; k < n; ++k) {
      rel.cycle_times_minutes.push_back(k % 5 == 0 ? 0.0 : minutes(gen));
    }
    const Trace t = FromRelative(rel, At(2020, 1, 1));  // throws if not monotone
    ASSERT_EQ(t.size(), static_cast<std::size_t>(n));
  }
}

}  // namespace
}  // namespace libra
