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

#include "libra/postprocessor.h"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>

#include "libra/error.h"

namespace libra {

Abstraction Abstract(const ActivitySequence& variant) {
  Abstraction out;
  for (std::size_t i = 0; i + 1 < variant.size(); ++i) out.emplace(variant[i], variant[i + 1]);
  return out;
}

Abstraction Abstract(const Trace& trace) { return Abstract(trace.Variant()); }

std::size_t StopThreshold(double rho, double p_hat) {
  if (!(rho > 0.0 && rho < 1.0)) throw Error(ErrorCode::kDomainError, "rho must lie in (0, 1)");
  if (!(p_hat > 0.0 && p_hat < 1.0)) {
    throw Error(ErrorCode::kDomainError, "p_hat must lie in (0, 1)");
  }
  const double n = std::ceil(std::log1p(-rho) / std::log1p(-p_hat));
  if (n >= static_cast<double>(std::numeric_limits<std::size_t>::max())) {
    return std::numeric_limits<std::size_t>::max();
  }
  return std::max<std::size_t>(1, static_cast<std::size_t>(n));
}

PickState::PickState(double omega, std::size_t stop_threshold)
    : omega_(omega), stop_threshold_(stop_threshold) {}

std::size_t PickState::Distance(const Trace& trace) const {
  const Abstraction pairs = Abstract(trace);
  return static_cast<std::size_t>(std::count_if(
      pairs.begin(), pairs.end(), [&](const DfPair& p) { return !union_.contains(p); }));
}

bool PickState::IsInformative(const Trace& trace) const {
  return static_cast<double>(Distance(trace)) > omega_;
}

bool PickState::Observe(const Trace& trace) {
  if (IsInformative(trace)) {
    run_ = 0;
  } else {
    ++run_;
  }
  const Abstraction pairs = Abstract(trace);
  union_.insert(pairs.begin(), pairs.end());
  return stopped();
}

std::vector<Trace> PickRelevant(const AnonymizedSample& sample, const RelevanceOptions& options,
                                RngStream& rng) {
  if (!(options.omega >= 0.0)) throw Error(ErrorCode::kDomainError, "omega must be >= 0");
  PickState state(options.omega, StopThreshold(options.rho, options.p_hat));

  const std::size_t n = sample.traces.size();
  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), std::size_t{0});
  // Lazy Fisher-Yates: only the scanned prefix is ever shuffled.
  std::size_t scanned = 0;
  while (scanned < n) {
    const std::size_t j = scanned + rng.UniformIndex(n - scanned);
    std::swap(order[scanned], order[j]);
    const bool stop = state.Observe(sample.traces[order[scanned]]);
    ++scanned;
    if (stop) break;
  }

  order.resize(scanned);
  std::sort(order.begin(), order.end());
  std::vector<Trace> out;
  out.reserve(order.size());
  for (std::size_t i : order) out.push_back(sample.traces[i]);
  return out;
}

}  // namespace libra
