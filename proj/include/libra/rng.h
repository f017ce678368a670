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

#ifndef LIBRA_RNG_H_
#define LIBRA_RNG_H_

#include <cstddef>
#include <cstdint>
#include <random>

namespace libra {

// SplitMix64 finalizer.
std::uint64_t Mix64(std::uint64_t x);

// A reproducible random stream identified by (seed, stream_index). Streams
// with different identities are seeded through Mix64 so they can be handed
// to independent workers without coordination.
class RngStream {
 public:
  RngStream(std::uint64_t seed, std::uint64_t stream_index);

  std::uint64_t seed() const { return seed_; }
  std::uint64_t stream_index() const { return stream_index_; }

  // Child stream for a sub-task; deterministic in (this identity, purpose).
  RngStream Fork(std::uint64_t purpose) const;

  std::uint64_t NextU64() { return engine_(); }

  // Uniform on the open interval (0, 1), 53-bit resolution.
  double NextOpenUnit();

  bool Bernoulli(double p);

  // Uniform integer in [0, n). n must be > 0.
  std::size_t UniformIndex(std::size_t n);

  // Laplace(0, b) by inversion of one NextOpenUnit() draw.
  double Laplace(double b);

 private:
  std::uint64_t seed_;
  std::uint64_t stream_index_;
  std::mt19937_64 engine_;
};

// Inverse CDF of Laplace(0, b) at u in (0, 1):
//   -b * sgn(u - 1/2) * log(1 - 2|u - 1/2|).
double LaplaceQuantile(double u, double b);

}  // namespace libra

#endif  // LIBRA_RNG_H_
