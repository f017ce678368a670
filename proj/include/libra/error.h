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

#ifndef LIBRA_ERROR_H_
#define LIBRA_ERROR_H_

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

namespace libra {

enum class ErrorCode {
  kMalformedRow,
  kBadTimestamp,
  kMissingColumn,
  kMalformedXml,
  kMissingAttribute,
  kInvalidLog,
  kEpochAfterStart,
  kDomainError,
  kNotAnonymizable,
  kEmptyDistribution,
  kBothEmpty,
  kIo,
};

std::string_view ErrorCodeName(ErrorCode code);

// Single exception type for the library. Parse errors carry the 1-based
// input row (CSV data rows count from the header as row 1).
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message,
        std::optional<std::size_t> row = std::nullopt);

  ErrorCode code() const { return code_; }
  std::optional<std::size_t> row() const { return row_; }

 private:
  ErrorCode code_;
  std::optional<std::size_t> row_;
};

}  // namespace libra

#endif  // LIBRA_ERROR_H_
