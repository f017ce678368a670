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

// End-to-end anonymization: clip rare variants, then run eta independent
// rounds of Poisson sampling, noise injection and relevance picking, and
// concatenate the rounds in round order.
//
// Round r draws all of its randomness from RngStream(seed, r), so rounds
// are independent work items. RunRoundsParallel distributes them over
// OpenMP threads; RunRoundsSerial is the reference it must match exactly.

#ifndef LIBRA_PIPELINE_H_
#define LIBRA_PIPELINE_H_

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "libra/accountant.h"
#include "libra/anonymizer.h"
#include "libra/log_model.h"

namespace libra {

struct RunOptions {
  AnonymizerOptions anonymizer;
  // Replaces the computed clipping threshold. Test hook only.
  std::optional<double> clip_threshold_override;
  // <= 0 leaves the choice to OpenMP; 1 runs the serial reference.
  int threads = 0;
};

struct RunResult {
  EventLog anonymized_log;
  PrivacyReport report;
  std::vector<std::string> warnings;
};

// Stream purposes forked from a round's RngStream.
inline constexpr std::uint64_t kSampleStream = 0;
inline constexpr std::uint64_t kNoiseStream = 1;
inline constexpr std::uint64_t kPickStream = 2;

// One round over the clipped log: sample, anonymize relative to `epoch`,
// pick relevant traces.
std::vector<Trace> RunRound(const EventLog& clipped, const PrivacyConfig& config, Instant epoch,
                            std::int64_t round_index, const AnonymizerOptions& options);

std::vector<std::vector<Trace>> RunRoundsSerial(const EventLog& clipped,
                                                const PrivacyConfig& config, Instant epoch,
                                                std::int64_t rounds,
                                                const AnonymizerOptions& options);

std::vector<std::vector<Trace>> RunRoundsParallel(const EventLog& clipped,
                                                  const PrivacyConfig& config, Instant epoch,
                                                  std::int64_t rounds,
                                                  const AnonymizerOptions& options, int threads);

// Throws kNotAnonymizable for a log whose variants are all unique and
// kDomainError for an invalid config. A log emptied by clipping produces an
// empty result plus a warning.
RunResult Run(const EventLog& log, const PrivacyConfig& config, const RunOptions& options = {});

}  // namespace libra

#endif  // LIBRA_PIPELINE_H_
