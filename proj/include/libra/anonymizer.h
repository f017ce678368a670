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

// The per-subsample mechanism: rare-variant clipping, Laplace noise on
// variant counts (sensitivity 1) and Laplace noise on relative start times
// (days) and cycle times (minutes).

#ifndef LIBRA_ANONYMIZER_H_
#define LIBRA_ANONYMIZER_H_

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "libra/accountant.h"
#include "libra/log_model.h"
#include "libra/rng.h"
#include "libra/sampler.h"

namespace libra {

struct AnonymizerOptions {
  // Forces every noise draw to zero. Test hook only.
  bool zero_noise = false;
};

struct AnonymizedSample {
  std::vector<Trace> traces;
  std::int64_t round_index = 0;
};

// Keeps the traces whose variant occurs at least `threshold` times, in input
// order. Throws kNotAnonymizable if every variant of a non-empty log is
// unique, and kDomainError for a negative threshold.
EventLog ClipRareVariants(const EventLog& log, double threshold);

// Realizes new variant counts. `noise[g]` is the integer offset for the g-th
// distinct variant of `traces` in ascending lexicographic order. A variant
// with count n gets max(0, n + noise[g]) instances: surplus instances are
// removed uniformly at random, missing ones are cloned from uniformly chosen
// instances under a fresh case id. Output is grouped by variant in the same
// order; survivors keep their relative order and precede clones.
std::vector<Trace> ApplyCountNoise(const std::vector<Trace>& traces,
                                   std::span<const std::int64_t> noise, RngStream& rng);

// One rounded Laplace(0, 1/epsilon) draw per variant, then ApplyCountNoise
// on the same stream.
std::vector<Trace> RandomizeVariantFrequencies(const Subsample& sample, double epsilon,
                                               RngStream& rng,
                                               const AnonymizerOptions& options = {});

// Adds the given offsets and clamps each component at 0.
RelativeTrace ApplyTimestampNoise(const RelativeTrace& rel, double start_noise_days,
                                  std::span<const double> cycle_noise_minutes);

// Draws Laplace(0, b) for the start (read as days) and then for each cycle
// time in order (read as minutes).
RelativeTrace AnonymizeTimestamps(const RelativeTrace& rel, double b, RngStream& rng,
                                  const AnonymizerOptions& options = {});

// Count noise at epsilon = EpsLaplace(alpha, scale) on rng.Fork(0), then
// timestamp noise at scale b on rng.Fork(1) relative to `epoch`. Output
// case ids are "r<round>_<n>" with n counting from 0.
AnonymizedSample AnonymizeSubsample(const Subsample& sample, const PrivacyConfig& config,
                                    Instant epoch, const RngStream& rng,
                                    const AnonymizerOptions& options = {});

std::string RoundCaseId(std::int64_t round_index, std::size_t n);

}  // namespace libra

#endif  // LIBRA_ANONYMIZER_H_
