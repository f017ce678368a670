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

#include "libra/rng.h"

#include <cmath>
#include <limits>

namespace libra {

std::uint64_t Mix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

RngStream::RngStream(std::uint64_t seed, std::uint64_t stream_index)
    : seed_(seed),
      stream_index_(stream_index),
      engine_(Mix64(Mix64(seed) ^ Mix64(stream_index + 0x632be59bd9b4e019ULL))) {}

RngStream RngStream::Fork(std::uint64_t purpose) const {
  return RngStream(Mix64(seed_ ^ Mix64(stream_index_)), purpose);
}

double RngStream::NextOpenUnit() {
  constexpr double kScale = 1.0 / 9007199254740992.0;  // 2^-53
  return (static_cast<double>(engine_() >> 11) + 0.5) * kScale;
}

bool RngStream::Bernoulli(double p) { return NextOpenUnit() < p; }

std::size_t RngStream::UniformIndex(std::size_t n) {
  // Rejection sampling removes modulo bias.
  const std::uint64_t range = n;
  const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() -
                              std::numeric_limits<std::uint64_t>::max() % range;
  std::uint64_t x;
  do {
    x = engine_();
  } while (x >= limit);
  return static_cast<std::size_t>(x % range);
}

double RngStream::Laplace(double b) { return LaplaceQuantile(NextOpenUnit(), b); }

double LaplaceQuantile(double u, double b) {
  const double centered = u - 0.5;
  const double sign = centered < 0 ? -1.0 : (centered > 0 ? 1.0 : 0.0);
  return -b * sign * std::log1p(-2.0 * std::abs(centered));
}

}  // namespace libra
