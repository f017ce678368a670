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

#include "libra/sampler.h"

#include <algorithm>
#include <numeric>

#include "libra/error.h"

namespace libra {

Subsample PoissonSample(const EventLog& log, double gamma, RngStream& rng,
                        std::int64_t round_index) {
  if (!(gamma >= 0.0 && gamma <= 1.0)) {
    throw Error(ErrorCode::kDomainError, "PoissonSample: gamma must lie in [0, 1]");
  }
  const auto& traces = log.traces();
  std::vector<std::size_t> order(traces.size());
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    return traces[a].case_id() < traces[b].case_id();
  });

  Subsample out;
  out.round_index = round_index;
  for (std::size_t i : order) {
    if (rng.Bernoulli(gamma)) out.traces.push_back(traces[i]);
  }
  return out;
}

}  // namespace libra
