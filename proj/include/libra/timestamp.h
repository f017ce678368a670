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

#ifndef LIBRA_TIMESTAMP_H_
#define LIBRA_TIMESTAMP_H_

#include <optional>
#include <string>
#include <string_view>

#include "libra/log_model.h"

namespace libra {

// Format name selecting the built-in ISO-8601 reader/writer. Any other
// format string is interpreted with strptime/strftime conversions.
inline constexpr std::string_view kIso8601 = "iso8601";

// Accepts "YYYY-MM-DD[T ]hh:mm[:ss[.fff]]" with an optional "Z" or
// "+hh:mm"/"-hh:mm" suffix; offsets are folded into UTC and fractional
// seconds truncated.
std::optional<Instant> ParseIso8601(std::string_view text);

// "YYYY-MM-DDThh:mm:ss" in UTC.
std::string FormatIso8601(Instant t);

std::optional<Instant> ParseTimestamp(std::string_view text, const std::string& format);
std::string FormatTimestamp(Instant t, const std::string& format);

}  // namespace libra

#endif  // LIBRA_TIMESTAMP_H_
