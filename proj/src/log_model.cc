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

#include "libra/log_model.h"

#include <algorithm>
#include <cmath>
#include <map>
#include <unordered_set>
#include <utility>

#include "libra/error.h"

namespace libra {

Trace::Trace(std::string case_id, std::vector<Event> events)
    : case_id_(std::move(case_id)), events_(std::move(events)) {
  if (case_id_.empty()) throw Error(ErrorCode::kInvalidLog, "empty case id");
  if (events_.empty()) {
    throw Error(ErrorCode::kInvalidLog, "trace '" + case_id_ + "' has no events");
  }
  for (std::size_t i = 0; i < events_.size(); ++i) {
    const Event& e = events_[i];
    if (e.case_id != case_id_) {
      throw Error(ErrorCode::kInvalidLog,
                  "event case id '" + e.case_id + "' in trace '" + case_id_ + "'");
    }
    if (e.activity.empty()) {
      throw Error(ErrorCode::kInvalidLog, "empty activity in trace '" + case_id_ + "'");
    }
    if (i > 0 && e.timestamp < events_[i - 1].timestamp) {
      throw Error(ErrorCode::kInvalidLog,
                  "timestamps decrease in trace '" + case_id_ + "'");
    }
  }
}

Trace Trace::FromUnordered(std::string case_id, std::vector<Event> events) {
  std::stable_sort(events.begin(), events.end(),
                   [](const Event& a, const Event& b) { return a.timestamp < b.timestamp; });
  return Trace(std::move(case_id), std::move(events));
}

ActivitySequence Trace::Variant() const {
  ActivitySequence out;
  out.reserve(events_.size());
  for (const Event& e : events_) out.push_back(e.activity);
  return out;
}

EventLog::EventLog(std::vector<Trace> traces) : traces_(std::move(traces)) {
  std::unordered_set<std::string> seen;
  seen.reserve(traces_.size());
  for (const Trace& t : traces_) {
    if (!seen.insert(t.case_id()).second) {
      throw Error(ErrorCode::kInvalidLog, "duplicate case id '" + t.case_id() + "'");
    }
    // Events are sorted, so the first one is the trace minimum.
    const Instant first = t.events().front().timestamp;
    if (!epoch_.has_value() || first < *epoch_) epoch_ = first;
  }
}

std::size_t EventLog::EventCount() const {
  std::size_t n = 0;
  for (const Trace& t : traces_) n += t.size();
  return n;
}

std::vector<TraceVariant> ExtractVariants(const EventLog& log) {
  std::map<ActivitySequence, std::size_t> counts;
  for (const Trace& t : log.traces()) ++counts[t.Variant()];

  std::vector<TraceVariant> out;
  out.reserve(counts.size());
  for (auto& [seq, n] : counts) out.push_back({seq, n});
  // std::map already orders by sequence; the stable sort keeps that as the
  // tie-break.
  std::stable_sort(out.begin(), out.end(), [](const TraceVariant& a, const TraceVariant& b) {
    return a.frequency > b.frequency;
  });
  return out;
}

RelativeTrace ToRelative(const Trace& trace, Instant epoch) {
  const auto& events = trace.events();
  if (events.front().timestamp < epoch) {
    throw Error(ErrorCode::kEpochAfterStart,
                "epoch is after the start of trace '" + trace.case_id() + "'");
  }
  RelativeTrace rel;
  rel.case_id = trace.case_id();
  rel.variant = trace.Variant();
  rel.relative_start_days =
      static_cast<double>((events.front().timestamp - epoch).count()) / kSecondsPerDay;
  rel.cycle_times_minutes.reserve(events.size() - 1);
  for (std::size_t i = 1; i < events.size(); ++i) {
    const auto gap = (events[i].timestamp - events[i - 1].timestamp).count();
    rel.cycle_times_minutes.push_back(static_cast<double>(gap) / kSecondsPerMinute);
  }
  return rel;
}

Trace FromRelative(const RelativeTrace& rel, Instant epoch) {
  if (rel.variant.empty()) {
    throw Error(ErrorCode::kInvalidLog, "relative trace '" + rel.case_id + "' is empty");
  }
  if (rel.cycle_times_minutes.size() + 1 != rel.variant.size()) {
    throw Error(ErrorCode::kInvalidLog,
                "relative trace '" + rel.case_id + "' has mismatched cycle times");
  }
  auto check = [&](double v) {
    if (!std::isfinite(v) || v < 0.0) {
      throw Error(ErrorCode::kInvalidLog,
                  "relative trace '" + rel.case_id + "' has a negative or non-finite offset");
    }
  };
  check(rel.relative_start_days);
  for (double c : rel.cycle_times_minutes) check(c);

  std::vector<Event> events;
  events.reserve(rel.variant.size());
  double offset_seconds = rel.relative_start_days * kSecondsPerDay;
  for (std::size_t i = 0; i < rel.variant.size(); ++i) {
    if (i > 0) offset_seconds += rel.cycle_times_minutes[i - 1] * kSecondsPerMinute;
    const auto rounded = static_cast<std::int64_t>(std::llround(offset_seconds));
    events.push_back({rel.case_id, rel.variant[i], epoch + std::chrono::seconds(rounded)});
  }
  return Trace(rel.case_id, std::move(events));
}

}  // namespace libra
