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

#include "libra/timestamp.h"

#include <time.h>

#include <cctype>
#include <charconv>
#include <cstdio>
#include <cstring>

namespace libra {
namespace {

using namespace std::chrono;

class Cursor {
 public:
  explicit Cursor(std::string_view s) : s_(s) {}

  bool Digits(int count, int& out) {
    if (pos_ + count > s_.size()) return false;
    int v = 0;
    for (int i = 0; i < count; ++i) {
      const char c = s_[pos_ + i];
      if (!std::isdigit(static_cast<unsigned char>(c))) return false;
      v = v * 10 + (c - '0');
    }
    pos_ += count;
    out = v;
    return true;
  }
  bool Consume(char c) {
    if (pos_ < s_.size() && s_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }
  bool ConsumeAny(std::string_view set) {
    if (pos_ < s_.size() && set.find(s_[pos_]) != std::string_view::npos) {
      ++pos_;
      return true;
    }
    return false;
  }
  char Peek() const { return pos_ < s_.size() ? s_[pos_] : '\0'; }
  bool Done() const { return pos_ == s_.size(); }
  void SkipDigits() {
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }

 private:
  std::string_view s_;
  std::size_t pos_ = 0;
};

std::string_view Trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

}  // namespace

std::optional<Instant> ParseIso8601(std::string_view text) {
  Cursor c(Trim(text));
  int y, mo, d, h, mi, s = 0;
  if (!c.Digits(4, y) || !c.Consume('-') || !c.Digits(2, mo) || !c.Consume('-') ||
      !c.Digits(2, d) || !c.ConsumeAny("T ") || !c.Digits(2, h) || !c.Consume(':') ||
      !c.Digits(2, mi)) {
    return std::nullopt;
  }
  if (c.Consume(':')) {
    if (!c.Digits(2, s)) return std::nullopt;
    if (c.Consume('.')) c.SkipDigits();
  }
  int offset_minutes = 0;
  if (c.Consume('Z')) {
  } else if (c.Peek() == '+' || c.Peek() == '-') {
    const int sign = c.Peek() == '-' ? -1 : 1;
    c.ConsumeAny("+-");
    int oh, om = 0;
    if (!c.Digits(2, oh)) return std::nullopt;
    c.Consume(':');
    if (c.Peek() != '\0' && !c.Digits(2, om)) return std::nullopt;
    offset_minutes = sign * (oh * 60 + om);
  }
  if (!c.Done()) return std::nullopt;

  const year_month_day ymd{year{y}, month{static_cast<unsigned>(mo)},
                           day{static_cast<unsigned>(d)}};
  if (!ymd.ok() || h > 23 || mi > 59 || s > 60) return std::nullopt;
  return Instant{sys_days{ymd}} + hours{h} + minutes{mi} + seconds{s} -
         minutes{offset_minutes};
}

std::string FormatIso8601(Instant t) {
  const sys_days day_point = floor<days>(t);
  const year_month_day ymd{day_point};
  const hh_mm_ss<seconds> hms{t - day_point};
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%04d-%02u-%02uT%02lld:%02lld:%02lld",
                static_cast<int>(ymd.year()), static_cast<unsigned>(ymd.month()),
                static_cast<unsigned>(ymd.day()),
                static_cast<long long>(hms.hours().count()),
                static_cast<long long>(hms.minutes().count()),
                static_cast<long long>(hms.seconds().count()));
  return buf;
}

std::optional<Instant> ParseTimestamp(std::string_view text, const std::string& format) {
  if (format == kIso8601) return ParseIso8601(text);
  const std::string copy(Trim(text));
  std::tm tm{};
  const char* end = strptime(copy.c_str(), format.c_str(), &tm);
  if (end == nullptr || *end != '\0') return std::nullopt;
  return Instant{seconds{timegm(&tm)}};
}

std::string FormatTimestamp(Instant t, const std::string& format) {
  if (format == kIso8601) return FormatIso8601(t);
  const time_t raw = static_cast<time_t>(t.time_since_epoch().count());
  std::tm tm{};
  gmtime_r(&raw, &tm);
  char buf[128];
  const std::size_t n = std::strftime(buf, sizeof(buf), format.c_str(), &tm);
  return std::string(buf, n);
}

}  // namespace libra
