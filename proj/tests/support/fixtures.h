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

#ifndef LIBRA_TESTS_SUPPORT_FIXTURES_H_
#define LIBRA_TESTS_SUPPORT_FIXTURES_H_

#include <cstddef>
#include <cstdint>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "libra/log_io.h"
#include "libra/log_model.h"

namespace libra::testing {

std::string DataPath(const std::string& name);
std::string ReadFile(const std::string& path);

// The five-case hospital excerpt, parsed from tests/data/hospital.csv.
EventLog HospitalLog();
CsvSchema HospitalSchema();

struct VariantSpec {
  ActivitySequence activities;
  std::size_t frequency;
};

// Cases named "c<n>" (shuffled across variants), starts spread over
// `span_days`, gaps uniform in [1, 600] minutes.
EventLog SyntheticLog(const std::vector<VariantSpec>& variants, std::uint64_t seed,
                      double span_days = 30.0);

// 1,000 cases / 5 variants, frequencies >= 100.
EventLog FiveVariantLog();
// 1,000 cases / ~15,000 events over 8 variants of length 12-18.
EventLog SepsisScaleLog();
// Small log with loops and shared prefixes.
EventLog LoopyLog();

std::set<ActivitySequence> VariantSet(const EventLog& log);

Instant At(int y, unsigned mo, unsigned d, int h = 0, int mi = 0, int s = 0);

}  // namespace libra::testing

#endif  // LIBRA_TESTS_SUPPORT_FIXTURES_H_
