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

#include "libra/log_io.h"

#include <algorithm>
#include <array>
#include <istream>
#include <iterator>
#include <ostream>
#include <sstream>
#include <unordered_map>
#include <utility>
#include <vector>

#include <boost/property_tree/ptree.hpp>
#include <boost/property_tree/xml_parser.hpp>

#include "libra/error.h"

namespace libra {
namespace {

struct Record {
  std::vector<std::string> fields;
  std::size_t row = 0;
};

// RFC 4180 records: quoted fields may contain the delimiter, doubled quotes
// and line breaks. Blank lines are skipped.
std::vector<Record> SplitRecords(std::string_view text, char delim) {
  std::vector<Record> records;
  Record current;
  std::string field;
  bool in_quotes = false;
  bool field_started = false;
  std::size_t row = 1;
  current.row = row;

  auto end_field = [&] {
    current.fields.push_back(std::move(field));
    field.clear();
    field_started = false;
  };
  auto end_record = [&] {
    const bool blank = current.fields.empty() && !field_started && field.empty();
    if (!blank) {
      end_field();
      records.push_back(std::move(current));
    }
    current = Record{};
    current.row = row;
  };

  for (std::size_t i = 0; i < text.size(); ++i) {
    const char c = text[i];
    if (in_quotes) {
      if (c == '"') {
        if (i + 1 < text.size() && text[i + 1] == '"') {
          field.push_back('"');
          ++i;
        } else {
          in_quotes = false;
        }
      } else {
        if (c == '\n') ++row;
        field.push_back(c);
      }
      continue;
    }
    if (c == '"' && field.empty()) {
      in_quotes = true;
      field_started = true;
    } else if (c == delim) {
      end_field();
      field_started = true;
    } else if (c == '\r' && i + 1 < text.size() && text[i + 1] == '\n') {
      continue;
    } else if (c == '\n') {
      ++row;
      end_record();
    } else {
      field.push_back(c);
      field_started = true;
    }
  }
  if (in_quotes) {
    throw Error(ErrorCode::kMalformedRow, "unterminated quoted field", current.row);
  }
  end_record();
  return records;
}

std::size_t ResolveColumn(const ColumnSelector& sel, const std::vector<std::string>& header) {
  if (const auto* index = std::get_if<std::size_t>(&sel)) {
    if (*index >= header.size()) {
      throw Error(ErrorCode::kMissingColumn,
                  "column index " + std::to_string(*index) + " out of range", 1);
    }
    return *index;
  }
  const auto& name = std::get<std::string>(sel);
  const auto it = std::find(header.begin(), header.end(), name);
  if (it == header.end()) {
    throw Error(ErrorCode::kMissingColumn, "no column named '" + name + "'", 1);
  }
  return static_cast<std::size_t>(it - header.begin());
}

bool NeedsQuoting(std::string_view s, char delim) {
  return s.find_first_of(std::string{delim, '"', '\n', '\r'}) != std::string_view::npos;
}

void WriteField(std::ostream& out, std::string_view s, char delim) {
  if (!NeedsQuoting(s, delim)) {
    out << s;
    return;
  }
  out << '"';
  for (char c : s) {
    if (c == '"') out << '"';
    out << c;
  }
  out << '"';
}

// Groups events by case preserving first-occurrence order of cases.
class LogBuilder {
 public:
  void Add(Event e) {
    auto [it, inserted] = index_.try_emplace(e.case_id, cases_.size());
    if (inserted) cases_.push_back({e.case_id, {}});
    cases_[it->second].second.push_back(std::move(e));
  }
  void EnsureCase(const std::string& case_id) {
    if (index_.try_emplace(case_id, cases_.size()).second) cases_.push_back({case_id, {}});
  }
  EventLog Build() && {
    std::vector<Trace> traces;
    traces.reserve(cases_.size());
    for (auto& [id, events] : cases_) {
      if (events.empty()) continue;
      traces.push_back(Trace::FromUnordered(std::move(id), std::move(events)));
    }
    return EventLog(std::move(traces));
  }

 private:
  std::unordered_map<std::string, std::size_t> index_;
  std::vector<std::pair<std::string, std::vector<Event>>> cases_;
};

using boost::property_tree::ptree;

// Value of the child attribute element (<string key=".." value=".."/>,
// <date .../>) with the given key, if any.
std::optional<std::string> XesAttribute(const ptree& node, std::string_view key) {
  for (const auto& [tag, child] : node) {
    if (tag == "<xmlattr>") continue;
    const auto attrs = child.get_child_optional("<xmlattr>");
    if (!attrs) continue;
    const auto k = attrs->get_optional<std::string>("key");
    if (k && *k == key) {
      if (auto v = attrs->get_optional<std::string>("value")) return *v;
    }
  }
  return std::nullopt;
}

}  // namespace

void CsvSchema::Validate() const {
  if (case_column == activity_column || case_column == timestamp_column ||
      activity_column == timestamp_column) {
    throw Error(ErrorCode::kDomainError, "CSV column selectors must be pairwise distinct");
  }
}

EventLog ParseCsv(std::string_view text, const CsvSchema& schema) {
  schema.Validate();
  const std::vector<Record> records = SplitRecords(text, schema.delimiter);
  if (records.empty()) {
    throw Error(ErrorCode::kMissingColumn, "input has no header row", 1);
  }
  const auto& header = records.front().fields;
  const std::size_t case_col = ResolveColumn(schema.case_column, header);
  const std::size_t act_col = ResolveColumn(schema.activity_column, header);
  const std::size_t ts_col = ResolveColumn(schema.timestamp_column, header);

  LogBuilder builder;
  for (std::size_t r = 1; r < records.size(); ++r) {
    const Record& rec = records[r];
    if (rec.fields.size() != header.size()) {
      throw Error(ErrorCode::kMalformedRow,
                  "expected " + std::to_string(header.size()) + " fields, got " +
                      std::to_string(rec.fields.size()),
                  rec.row);
    }
    const std::string& case_id = rec.fields[case_col];
    const std::string& activity = rec.fields[act_col];
    if (case_id.empty() || activity.empty()) {
      throw Error(ErrorCode::kMalformedRow, "empty case id or activity", rec.row);
    }
    const auto ts = ParseTimestamp(rec.fields[ts_col], schema.timestamp_format);
    if (!ts) {
      throw Error(ErrorCode::kBadTimestamp, "cannot parse '" + rec.fields[ts_col] + "'",
                  rec.row);
    }
    builder.Add({case_id, activity, *ts});
  }
  return std::move(builder).Build();
}

EventLog ParseCsv(std::istream& in, const CsvSchema& schema) {
  const std::string text{std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
  return ParseCsv(std::string_view(text), schema);
}

void SerializeCsv(const EventLog& log, std::ostream& out, const CsvSchema& schema) {
  schema.Validate();
  // Column layout: named selectors go in case/activity/timestamp order,
  // index selectors at their index.
  const std::array<const ColumnSelector*, 3> selectors = {
      &schema.case_column, &schema.activity_column, &schema.timestamp_column};
  const std::array<std::string, 3> default_names = {"case_id", "activity", "timestamp"};
  std::array<std::size_t, 3> position{0, 1, 2};
  std::array<std::string, 3> names = default_names;
  bool by_index = false;
  for (std::size_t i = 0; i < 3; ++i) {
    if (const auto* idx = std::get_if<std::size_t>(selectors[i])) {
      by_index = true;
      position[i] = *idx;
    } else {
      names[i] = std::get<std::string>(*selectors[i]);
    }
  }
  std::size_t width = 3;
  if (by_index) {
    for (std::size_t i = 0; i < 3; ++i) {
      if (!std::holds_alternative<std::size_t>(*selectors[i])) {
        throw Error(ErrorCode::kDomainError,
                    "cannot mix index and name selectors when serializing");
      }
      width = std::max(width, position[i] + 1);
    }
  }
  std::vector<std::string> row(width);
  auto write_row = [&] {
    for (std::size_t i = 0; i < row.size(); ++i) {
      if (i > 0) out << schema.delimiter;
      WriteField(out, row[i], schema.delimiter);
    }
    out << '\n';
  };

  for (std::size_t i = 0; i < 3; ++i) row[position[i]] = names[i];
  write_row();
  for (const Trace& t : log.traces()) {
    for (const Event& e : t.events()) {
      std::fill(row.begin(), row.end(), std::string());
      row[position[0]] = e.case_id;
      row[position[1]] = e.activity;
      row[position[2]] = FormatTimestamp(e.timestamp, schema.timestamp_format);
      write_row();
    }
  }
}

std::string SerializeCsv(const EventLog& log, const CsvSchema& schema) {
  std::ostringstream out;
  SerializeCsv(log, out, schema);
  return out.str();
}

EventLog ParseXes(std::istream& in) {
  ptree doc;
  try {
    boost::property_tree::read_xml(in, doc);
  } catch (const boost::property_tree::xml_parser_error& e) {
    throw Error(ErrorCode::kMalformedXml, e.message(), e.line());
  }
  const auto root = doc.get_child_optional("log");
  if (!root) throw Error(ErrorCode::kMalformedXml, "missing <log> root element");

  LogBuilder builder;
  std::size_t trace_index = 0;
  for (const auto& [tag, trace] : *root) {
    if (tag != "trace") continue;
    const std::string case_id =
        XesAttribute(trace, "concept:name").value_or("trace_" + std::to_string(trace_index));
    ++trace_index;
    builder.EnsureCase(case_id);
    for (const auto& [etag, event] : trace) {
      if (etag != "event") continue;
      const auto activity = XesAttribute(event, "concept:name");
      const auto stamp = XesAttribute(event, "time:timestamp");
      if (!activity || activity->empty()) {
        throw Error(ErrorCode::kMissingAttribute,
                    "event in trace '" + case_id + "' lacks concept:name");
      }
      if (!stamp) {
        throw Error(ErrorCode::kMissingAttribute,
                    "event in trace '" + case_id + "' lacks time:timestamp");
      }
      const auto ts = ParseIso8601(*stamp);
      if (!ts) throw Error(ErrorCode::kBadTimestamp, "cannot parse '" + *stamp + "'");
      builder.Add({case_id, *activity, *ts});
    }
  }
  return std::move(builder).Build();
}

EventLog ParseXes(std::string_view text) {
  std::istringstream in{std::string(text)};
  return ParseXes(in);
}

}  // namespace libra
