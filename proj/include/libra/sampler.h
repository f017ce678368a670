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

#ifndef LIBRA_SAMPLER_H_
#define LIBRA_SAMPLER_H_

#include <cstdint>
#include <vector>

#include "libra/log_model.h"
#include "libra/rng.h"

namespace libra {

// Whole traces copied from a source log.
struct Subsample {
  std::vector<Trace> traces;
  std::int64_t round_index = 0;
};

// Includes each trace independently with probability `gamma`. Exactly one
// draw is consumed per trace, visiting traces in ascending case-ID order,
// so the result does not depend on the in-memory order of `log`. Selected
// traces are returned in that case-ID order.
Subsample PoissonSample(const EventLog& log, double gamma, RngStream& rng,
                        std::int64_t round_index = 0);

}  // namespace libra

#endif  // LIBRA_SAMPLER_H_
