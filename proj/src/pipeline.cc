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

#include "libra/pipeline.h"

#include <omp.h>

#include <exception>
#include <utility>

#include "libra/error.h"
#include "libra/postprocessor.h"
#include "libra/sampler.h"

namespace libra {

std::vector<Trace> RunRound(const EventLog& clipped, const PrivacyConfig& config, Instant epoch,
                            std::int64_t round_index, const AnonymizerOptions& options) {
  const RngStream round_rng(config.seed, static_cast<std::uint64_t>(round_index));
  RngStream sample_rng = round_rng.Fork(kSampleStream);
  RngStream pick_rng = round_rng.Fork(kPickStream);

  const Subsample sample = PoissonSample(clipped, config.gamma, sample_rng, round_index);
  const AnonymizedSample noisy =
      AnonymizeSubsample(sample, config, epoch, round_rng.Fork(kNoiseStream), options);
  return PickRelevant(noisy, {config.omega, config.rho, config.p_hat}, pick_rng);
}

std::vector<std::vector<Trace>> RunRoundsSerial(const EventLog& clipped,
                                                const PrivacyConfig& config, Instant epoch,
                                                std::int64_t rounds,
                                                const AnonymizerOptions& options) {
  std::vector<std::vector<Trace>> out(static_cast<std::size_t>(rounds));
  for (std::int64_t r = 0; r < rounds; ++r) {
    out[static_cast<std::size_t>(r)] = RunRound(clipped, config, epoch, r, options);
  }
  return out;
}

std::vector<std::vector<Trace>> RunRoundsParallel(const EventLog& clipped,
                                                  const PrivacyConfig& config, Instant epoch,
                                                  std::int64_t rounds,
                                                  const AnonymizerOptions& options, int threads) {
  std::vector<std::vector<Trace>> out(static_cast<std::size_t>(rounds));
  std::exception_ptr failure;
  const int team = threads > 0 ? threads : omp_get_max_threads();

#pragma omp parallel for schedule(dynamic, 1) num_threads(team)
  for (std::int64_t r = 0; r < rounds; ++r) {
    try {
      out[static_cast<std::size_t>(r)] = RunRound(clipped, config, epoch, r, options);
    } catch (...) {
#pragma omp critical(libra_round_failure)
      if (!failure) failure = std::current_exception();
    }
  }
  if (failure) std::rethrow_exception(failure);
  return out;
}

RunResult Run(const EventLog& log, const PrivacyConfig& config, const RunOptions& options) {
  config.Validate();
  RunResult result;
  const auto k = static_cast<std::int64_t>(ExtractVariants(log).size());
  if (log.empty()) {
    result.report = BuildReport(config, 0, 0);
    result.warnings.push_back("input log is empty; returning an empty log");
    return result;
  }

  const double epsilon = EpsLaplace(config.alpha, config.scale);
  double threshold = ClippingThreshold(epsilon, config.delta, k);
  if (options.clip_threshold_override.has_value()) {
    threshold = *options.clip_threshold_override;
    result.warnings.push_back("clipping threshold overridden to " + std::to_string(threshold));
  }
  const EventLog clipped = ClipRareVariants(log, threshold);
  const auto z = static_cast<std::int64_t>(clipped.size());

  result.report = BuildReport(config, z, k);
  result.report.variants_after = static_cast<std::int64_t>(ExtractVariants(clipped).size());
  result.report.cases_before = static_cast<std::int64_t>(log.size());
  result.report.clipping_threshold = threshold;

  if (clipped.empty()) {
    result.warnings.push_back("every trace variant occurs fewer than " +
                              std::to_string(threshold) +
                              " times; clipping removed all traces, returning an empty log");
    return result;
  }
  if (options.anonymizer.zero_noise) {
    result.warnings.push_back("noise disabled; output is NOT differentially private");
  }

  const Instant epoch = *log.epoch();
  const std::int64_t rounds = result.report.eta;
  const auto per_round =
      options.threads == 1
          ? RunRoundsSerial(clipped, config, epoch, rounds, options.anonymizer)
          : RunRoundsParallel(clipped, config, epoch, rounds, options.anonymizer, options.threads);

  std::vector<Trace> merged;
  for (const auto& round : per_round) merged.insert(merged.end(), round.begin(), round.end());
  result.anonymized_log = EventLog(std::move(merged));
  result.report.cases_output = static_cast<std::int64_t>(result.anonymized_log.size());
  return result;
}

}  // namespace libra
