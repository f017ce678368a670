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

#ifndef LIBRA_LOG_MODEL_H_
#define LIBRA_LOG_MODEL_H_

#include <chrono>
#include <cstddef>
#include <optional>
#include <string>
#include <vector>

namespace libra {

// UTC instant at second precision.
using Instant = std::chrono::sys_seconds;

using ActivitySequence = std::vector<std::string>;

struct Event {
  std::string case_id;
  std::string activity;
  Instant timestamp;

  friend bool operator==(const Event&, const Event&) = default;
};

// The timestamp-ordered events of one case. Never empty.
class Trace {
 public:
  // Throws kInvalidLog unless `events` is non-empty, every event carries
  // `case_id` and a non-empty activity, and timestamps are non-decreasing.
  Trace(std::string case_id, std::vector<Event> events);

  // Stable-sorts `events` by timestamp first, so equal timestamps keep
  // their input order.
  static Trace FromUnordered(std::string case_id, std::vector<Event> events);

  const std::string& case_id() const { return case_id_; }
  const std::vector<Event>& events() const { return events_; }
  std::size_t size() const { return events_.size(); }
  ActivitySequence Variant() const;

  friend bool operator==(const Trace&, const Trace&) = default;

 private:
  std::string case_id_;
  std::vector<Event> events_;
};

// A set of traces with unique case IDs. The epoch is the earliest event
// timestamp and is absent for an empty log.
class EventLog {
 public:
  EventLog() = default;
  // Throws kInvalidLog on duplicate case IDs.
  explicit EventLog(std::vector<Trace> traces);

  const std::vector<Trace>& traces() const { return traces_; }
  std::optional<Instant> epoch() const { return epoch_; }
  std::size_t size() const { return traces_.size(); }
  bool empty() const { return traces_.empty(); }
  std::size_t EventCount() const;

  friend bool operator==(const EventLog&, const EventLog&) = default;

 private:
  std::vector<Trace> traces_;
  std::optional<Instant> epoch_;
};

struct TraceVariant {
  ActivitySequence activities;
  std::size_t frequency = 0;

  friend bool operator==(const TraceVariant&, const TraceVariant&) = default;
};

// Distinct activity sequences of `log`, sorted by frequency descending and
// then lexicographically by sequence.
std::vector<TraceVariant> ExtractVariants(const EventLog& log);

// A trace expressed as an offset from the log epoch (days) plus the gaps
// between consecutive events (minutes).
struct RelativeTrace {
  std::string case_id;
  ActivitySequence variant;
  double relative_start_days = 0.0;
  std::vector<double> cycle_times_minutes;  // size() == variant.size() - 1

  friend bool operator==(const RelativeTrace&, const RelativeTrace&) = default;
};

inline constexpr double kSecondsPerDay = 86400.0;
inline constexpr double kSecondsPerMinute = 60.0;
inline constexpr double kSecondsPerHour = 3600.0;

// Throws kEpochAfterStart if `epoch` is later than the first event.
RelativeTrace ToRelative(const Trace& trace, Instant epoch);

// Inverse of ToRelative. Absolute offsets are accumulated in seconds and
// rounded to the nearest second, so non-negative inputs always produce a
// non-decreasing trace. Throws kInvalidLog on negative or non-finite
// components.
Trace FromRelative(const RelativeTrace& rel, Instant epoch);

}  // namespace libra

#endif  // LIBRA_LOG_MODEL_H_
