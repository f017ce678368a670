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

#include "fixtures.h"

#include <algorithm>
#include <fstream>
#include <iterator>
#include <random>
#include <stdexcept>

namespace libra::testing {

std::string DataPath(const std::string& name) {
  return std::string(LIBRA_TEST_DATA_DIR) + "/" + name;
}

std::string ReadFile(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open " + path);
  return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

CsvSchema HospitalSchema() {
  CsvSchema schema;
  schema.timestamp_format = "%m/%d/%Y %H:%M";
  return schema;
}

EventLog HospitalLog() { return ParseCsv(ReadFile(DataPath("hospital.csv")), HospitalSchema()); }

Instant At(int y, unsigned mo, unsigned d, int h, int mi, int s) {
  using namespace std::chrono;
  return Instant{sys_days{year{y} / month{mo} / day{d}}} + hours{h} + minutes{mi} + seconds{s};
}

EventLog SyntheticLog(const std::vector<VariantSpec>& variants, std::uint64_t seed,
                      double span_days) {
  std::mt19937_64 gen(seed);
  std::vector<const ActivitySequence*> assignment;
  for (const VariantSpec& v : variants) {
    for (std::size_t i = 0; i < v.frequency; ++i) assignment.push_back(&v.activities);
  }
  std::shuffle(assignment.begin(), assignment.end(), gen);

  std::uniform_int_distribution<std::int64_t> start_dist(
      0, static_cast<std::int64_t>(span_days * 86400.0));
  std::uniform_int_distribution<std::int64_t> gap_dist(60, 600 * 60);
  const Instant base = At(2021, 4, 8);

  std::vector<Trace> traces;
  traces.reserve(assignment.size());
  for (std::size_t c = 0; c < assignment.size(); ++c) {
    const std::string id = "c" + std::to_string(c);
    Instant t = base + std::chrono::seconds(start_dist(gen));
    std::vector<Event> events;
    for (const std::string& a : *assignment[c]) {
      events.push_back({id, a, t});
      t += std::chrono::seconds(gap_dist(gen));
    }
    traces.emplace_back(id, std::move(events));
  }
  return EventLog(std::move(traces));
}

EventLog FiveVariantLog() {
  return SyntheticLog({{{"Register", "Triage", "Admit"}, 350},
                       {{"Register", "Admit", "Surgery", "Release"}, 250},
                       {{"Register", "Antibiotics", "Release"}, 150},
                       {{"Register", "Triage", "Admit", "Surgery", "Release"}, 140},
                       {{"Register", "Release"}, 110}},
                      11);
}

EventLog SepsisScaleLog() {
  const ActivitySequence core = {"ER Registration", "ER Triage", "ER Sepsis Triage", "IV Liquid",
                                 "IV Antibiotics",  "Admission NC", "CRP",         "Leucocytes",
                                 "LacticAcid",      "CRP",          "Leucocytes",  "Release A"};
  std::vector<VariantSpec> specs;
  for (int v = 0; v < 8; ++v) {
    ActivitySequence seq = core;
    // Each variant inserts a distinct tail so lengths run from 12 to 18.
    for (int extra = 0; extra < (v * 6) / 7; ++extra) {
      seq.insert(seq.end() - 1, "Lab " + std::to_string(v) + "." + std::to_string(extra));
    }
    if (v % 2 == 1) std::swap(seq[3], seq[4]);
    specs.push_back({seq, 125});
  }
  return SyntheticLog(specs, 2021, 365.0);
}

EventLog LoopyLog() {
  return SyntheticLog({{{"A", "B", "A", "B", "C"}, 40},
                       {{"A", "B", "C"}, 35},
                       {{"A", "C"}, 30},
                       {{"A"}, 25},
                       {{"A", "B", "B", "D"}, 20}},
                      7, 10.0);
}

std::set<ActivitySequence> VariantSet(const EventLog& log) {
  std::set<ActivitySequence> out;
  for (const Trace& t : log.traces()) out.insert(t.Variant());
  return out;
}

}  // namespace libra::testing
