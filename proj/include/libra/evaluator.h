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

#ifndef LIBRA_EVALUATOR_H_
#define LIBRA_EVALUATOR_H_

#include <cstdint>
#include <map>
#include <vector>

#include "libra/log_model.h"
#include "libra/postprocessor.h"

namespace libra {

struct DfgEdge {
  std::int64_t frequency = 0;
  double total_duration_hours = 0.0;

  double MeanDurationHours() const {
    return frequency > 0 ? total_duration_hours / static_cast<double>(frequency) : 0.0;
  }
  friend bool operator==(const DfgEdge&, const DfgEdge&) = default;
};

// Directly-follows graph annotated with frequency and total gap in hours.
using Dfg = std::map<DfPair, DfgEdge>;

Dfg BuildDfg(const EventLog& log);

// A finite weighted point set on the real line.
struct Distribution1D {
  std::vector<double> support;
  std::vector<double> weights;
};

// Wasserstein-1 distance between the normalized distributions, computed as
// the integral of |F_u - F_v| over the merged sorted support. Throws
// kEmptyDistribution for an empty input and kDomainError for mismatched
// sizes, non-finite support or non-positive total weight.
double Emd1d(const Distribution1D& u, const Distribution1D& v);

// Both DFGs are aligned on the union of their edges (missing edge = 0) and
// each edge contributes one unit-weight point. Throw kBothEmpty when the
// union is empty.
double EmdFrequency(const Dfg& a, const Dfg& b);
double EmdTime(const Dfg& a, const Dfg& b);

}  // namespace libra

#endif  // LIBRA_EVALUATOR_H_
