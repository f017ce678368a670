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

#include "libra/error.h"

namespace libra {
namespace {

std::string Decorate(ErrorCode code, const std::string& message,
                     std::optional<std::size_t> row) {
  std::string out(ErrorCodeName(code));
  if (row.has_value()) out += " (row " + std::to_string(*row) + ")";
  out += ": ";
  out += message;
  return out;
}

}  // namespace

std::string_view ErrorCodeName(ErrorCode code) {
  switch (code) {
    case ErrorCode::kMalformedRow: return "MalformedRow";
    case ErrorCode::kBadTimestamp: return "BadTimestamp";
    case ErrorCode::kMissingColumn: return "MissingColumn";
    case ErrorCode::kMalformedXml: return "MalformedXml";
    case ErrorCode::kMissingAttribute: return "MissingAttribute";
    case ErrorCode::kInvalidLog: return "InvalidLog";
    case ErrorCode::kEpochAfterStart: return "EpochAfterStart";
    case ErrorCode::kDomainError: return "DomainError";
    case ErrorCode::kNotAnonymizable: return "NotAnonymizable";
    case ErrorCode::kEmptyDistribution: return "EmptyDistribution";
    case ErrorCode::kBothEmpty: return "BothEmpty";
    case ErrorCode::kIo: return "IoError";
  }
  return "Unknown";
}

Error::Error(ErrorCode code, const std::string& message,
             std::optional<std::size_t> row)
    : std::runtime_error(Decorate(code, message, row)), code_(code), row_(row) {}

}  // namespace libra
