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

#include "libra/anonymizer.h"

#include <algorithm>
#include <cmath>
#include <map>
#include <numeric>
#include <utility>

#include "libra/error.h"

namespace libra {
namespace {

Trace Relabel(const Trace& t, const std::string& case_id) {
  std::vector<Event> events = t.events();
  for (Event& e : events) e.case_id = case_id;
  return Trace(case_id, std::move(events));
}

// Indices of `traces` grouped by variant, groups in ascending variant order.
std::map<ActivitySequence, std::vector<std::size_t>> GroupByVariant(
    const std::vector<Trace>& traces) {
  std::map<ActivitySequence, std::vector<std::size_t>> groups;
  for (std::size_t i = 0; i < traces.size(); ++i) groups[traces[i].Variant()].push_back(i);
  return groups;
}

}  // namespace

std::string RoundCaseId(std::int64_t round_index, std::size_t n) {
  return "r" + std::to_string(round_index) + "_" + std::to_string(n);
}

EventLog ClipRareVariants(const EventLog& log, double threshold) {
  if (!(threshold >= 0.0)) {
    throw Error(ErrorCode::kDomainError, "clipping threshold must be >= 0");
  }
  if (log.empty()) return log;

  std::map<ActivitySequence, std::size_t> counts;
  for (const Trace& t : log.traces()) ++counts[t.Variant()];
  const bool all_unique = std::all_of(counts.begin(), counts.end(),
                                      [](const auto& kv) { return kv.second == 1; });
  if (all_unique) {
    throw Error(ErrorCode::kNotAnonymizable, "log not anonymizable: all trace variants unique");
  }

  std::vector<Trace> kept;
  for (const Trace& t : log.traces()) {
    if (static_cast<double>(counts[t.Variant()]) >= threshold) kept.push_back(t);
  }
  return EventLog(std::move(kept));
}

std::vector<Trace> ApplyCountNoise(const std::vector<Trace>& traces,
                                   std::span<const std::int64_t> noise, RngStream& rng) {
  const auto groups = GroupByVariant(traces);
  if (noise.size() != groups.size()) {
    throw Error(ErrorCode::kDomainError, "one noise value per variant required");
  }
  std::vector<Trace> out;
  std::size_t g = 0;
  std::size_t clones = 0;
  for (const auto& [variant, members] : groups) {
    const auto n = static_cast<std::int64_t>(members.size());
    const std::int64_t target = std::max<std::int64_t>(0, n + noise[g++]);

    if (target <= n) {
      // Partial Fisher-Yates picks a uniform subset of survivors.
      std::vector<std::size_t> pool = members;
      for (std::int64_t i = 0; i < target; ++i) {
        const std::size_t j = static_cast<std::size_t>(i) + rng.UniformIndex(pool.size() - i);
        std::swap(pool[i], pool[j]);
      }
      pool.resize(static_cast<std::size_t>(target));
      std::sort(pool.begin(), pool.end());
      for (std::size_t idx : pool) out.push_back(traces[idx]);
    } else {
      for (std::size_t idx : members) out.push_back(traces[idx]);
      for (std::int64_t i = n; i < target; ++i) {
        const Trace& source = traces[members[rng.UniformIndex(members.size())]];
        out.push_back(Relabel(source, "clone" + std::to_string(clones++) + "_" +
                                          source.case_id()));
      }
    }
  }
  return out;
}

std::vector<Trace> RandomizeVariantFrequencies(const Subsample& sample, double epsilon,
                                               RngStream& rng,
                                               const AnonymizerOptions& options) {
  if (!(epsilon > 0.0)) {
    throw Error(ErrorCode::kDomainError, "count noise requires epsilon > 0");
  }
  const std::size_t variant_count = GroupByVariant(sample.traces).size();
  std::vector<std::int64_t> noise(variant_count, 0);
  if (!options.zero_noise) {
    for (auto& v : noise) v = std::llround(rng.Laplace(1.0 / epsilon));
  }
  return ApplyCountNoise(sample.traces, noise, rng);
}

RelativeTrace ApplyTimestampNoise(const RelativeTrace& rel, double start_noise_days,
                                  std::span<const double> cycle_noise_minutes) {
  if (cycle_noise_minutes.size() != rel.cycle_times_minutes.size()) {
    throw Error(ErrorCode::kDomainError, "one noise value per cycle time required");
  }
  RelativeTrace out = rel;
  out.relative_start_days = std::max(0.0, rel.relative_start_days + start_noise_days);
  for (std::size_t i = 0; i < out.cycle_times_minutes.size(); ++i) {
    out.cycle_times_minutes[i] =
        std::max(0.0, rel.cycle_times_minutes[i] + cycle_noise_minutes[i]);
  }
  return out;
}

RelativeTrace AnonymizeTimestamps(const RelativeTrace& rel, double b, RngStream& rng,
                                  const AnonymizerOptions& options) {
  if (!(b > 0.0)) throw Error(ErrorCode::kDomainError, "timestamp noise requires b > 0");
  double start = 0.0;
  std::vector<double> cycles(rel.cycle_times_minutes.size(), 0.0);
  if (!options.zero_noise) {
    start = rng.Laplace(b);
    for (double& c : cycles) c = rng.Laplace(b);
  }
  return ApplyTimestampNoise(rel, start, cycles);
}

AnonymizedSample AnonymizeSubsample(const Subsample& sample, const PrivacyConfig& config,
                                    Instant epoch, const RngStream& rng,
                                    const AnonymizerOptions& options) {
  AnonymizedSample out;
  out.round_index = sample.round_index;
  if (sample.traces.empty()) return out;

  RngStream count_rng = rng.Fork(0);
  RngStream time_rng = rng.Fork(1);
  const double epsilon = EpsLaplace(config.alpha, config.scale);
  const std::vector<Trace> counted =
      RandomizeVariantFrequencies(sample, epsilon, count_rng, options);

  out.traces.reserve(counted.size());
  for (std::size_t i = 0; i < counted.size(); ++i) {
    RelativeTrace rel = ToRelative(counted[i], epoch);
    rel = AnonymizeTimestamps(rel, config.scale, time_rng, options);
    rel.case_id = RoundCaseId(sample.round_index, i);
    out.traces.push_back(FromRelative(rel, epoch));
  }
  return out;
}

}  // namespace libra
