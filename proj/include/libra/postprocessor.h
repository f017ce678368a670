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

// Relevance-driven selection of traces from an anonymized subsample.
//
// Traces are scanned in a seeded random order. A trace is informative when
// more than `omega` of its directly-follows pairs are missing from the union
// of the pairs seen so far. Scanning stops once N consecutive traces were
// uninformative, where N is the smallest run length that bounds the
// probability of new information by p_hat with confidence rho. Every trace
// scanned up to and including the stopping one is kept.

#ifndef LIBRA_POSTPROCESSOR_H_
#define LIBRA_POSTPROCESSOR_H_

#include <cstddef>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "libra/anonymizer.h"
#include "libra/log_model.h"
#include "libra/rng.h"

namespace libra {

using DfPair = std::pair<std::string, std::string>;
using Abstraction = std::set<DfPair>;

Abstraction Abstract(const ActivitySequence& variant);
Abstraction Abstract(const Trace& trace);

struct RelevanceOptions {
  double omega = 0.0;
  double rho = 0.95;
  double p_hat = 0.05;
};

// ceil(log(1 - rho) / log(1 - p_hat)). Throws kDomainError unless rho and
// p_hat lie in (0, 1).
std::size_t StopThreshold(double rho, double p_hat);

class PickState {
 public:
  PickState(double omega, std::size_t stop_threshold);

  // Number of pairs of `trace` absent from the union.
  std::size_t Distance(const Trace& trace) const;
  bool IsInformative(const Trace& trace) const;

  // Records a scanned trace: merges its pairs into the union and updates the
  // uninformative run. Returns true once the run reaches the threshold.
  bool Observe(const Trace& trace);

  const Abstraction& union_abstraction() const { return union_; }
  std::size_t consecutive_uninformative() const { return run_; }
  std::size_t stop_threshold() const { return stop_threshold_; }
  bool stopped() const { return run_ >= stop_threshold_; }

 private:
  double omega_;
  std::size_t stop_threshold_;
  std::size_t run_ = 0;
  Abstraction union_;
};

// Returns the kept traces in their original sample order.
std::vector<Trace> PickRelevant(const AnonymizedSample& sample, const RelevanceOptions& options,
                                RngStream& rng);

}  // namespace libra

#endif  // LIBRA_POSTPROCESSOR_H_
