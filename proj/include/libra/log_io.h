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

#ifndef LIBRA_LOG_IO_H_
#define LIBRA_LOG_IO_H_

#include <cstddef>
#include <iosfwd>
#include <string>
#include <string_view>
#include <variant>

#include "libra/log_model.h"
#include "libra/timestamp.h"

namespace libra {

// Header name or zero-based column index.
using ColumnSelector = std::variant<std::string, std::size_t>;

struct CsvSchema {
  ColumnSelector case_column = std::string("case_id");
  ColumnSelector activity_column = std::string("activity");
  ColumnSelector timestamp_column = std::string("timestamp");
  std::string timestamp_format = std::string(kIso8601);
  char delimiter = ',';

  // Throws kDomainError if two selectors coincide.
  void Validate() const;
};

// Reads delimited text with a header row. Traces appear in order of first
// occurrence of their case; each trace is stable-sorted by timestamp.
// Errors (all with the 1-based physical row): kMalformedRow, kBadTimestamp,
// kMissingColumn.
EventLog ParseCsv(std::istream& in, const CsvSchema& schema = {});
EventLog ParseCsv(std::string_view text, const CsvSchema& schema = {});

// Writes a header plus one row per event, traces in log order. Index
// selectors are laid out by index and named case_id/activity/timestamp.
void SerializeCsv(const EventLog& log, std::ostream& out, const CsvSchema& schema = {});
std::string SerializeCsv(const EventLog& log, const CsvSchema& schema = {});

// Minimal XES: <trace> elements holding <event> elements with
// concept:name and time:timestamp attributes. Everything else is ignored.
// A trace without concept:name gets the case id "trace_<n>".
// Errors: kMalformedXml, kMissingAttribute.
EventLog ParseXes(std::istream& in);
EventLog ParseXes(std::string_view text);

}  // namespace libra

#endif  // LIBRA_LOG_IO_H_
