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

// Privacy budget arithmetic for Laplace noise on Poisson-subsampled logs.
// All logarithms are natural. All functions are pure.

#ifndef LIBRA_ACCOUNTANT_H_
#define LIBRA_ACCOUNTANT_H_

#include <cstddef>
#include <cstdint>
#include <string>
#include <utility>

namespace libra {

struct PrivacyConfig {
  int alpha = 2;          // integer Renyi order >= 2
  double delta = 1e-4;    // (0, 1)
  double gamma = 0.05;    // Poisson sampling ratio, (0, 1]
  double scale = 2.0;     // Laplace scale b > 0
  double omega = 0.0;     // relevance distance threshold >= 0
  double rho = 0.95;      // discovery-sufficiency confidence, (0, 1)
  double p_hat = 0.05;    // new-information probability bound, (0, 1)
  std::uint64_t seed = 0;
  bool eta_literal = false;  // use ceil(gamma * z) rounds instead of ceil(1 / gamma)

  // Throws kDomainError naming the first offending field.
  void Validate() const;
};

// Renyi DP of the Laplace mechanism with scale `b` (sensitivity 1) at
// integer order `alpha`:
//   1/(a-1) * log( a/(2a-1) e^{(a-1)/b} + (a-1)/(2a-1) e^{-a/b} ).
// Evaluated in log space so large a / small b do not overflow.
double EpsLaplace(int alpha, double b);

// Rare-variant threshold (1/eps) log(2k/delta).
double ClippingThreshold(double epsilon, double delta, std::int64_t k);

// Amplification of an (eps, delta)-DP mechanism by Poisson subsampling at
// rate gamma: (log(1 + gamma (e^eps - 1)), gamma delta).
std::pair<double, double> AmplifySimple(double epsilon, double delta, double gamma);

// Upper bound on the RDP of the Poisson-subsampled Laplace mechanism at
// integer order alpha:
//   1/(a-1) log( (1-g)^{a-1} (a g - g + 1)
//              + C(a,2) g^2 (1-g)^{a-2} e^{eps(2)}
//              + 3 sum_{j=3..a} C(a,j) (1-g)^{a-j} g^j e^{(j-1) eps(j)} )
// with eps(j) = EpsLaplace(j, b). Exactly 0 at g = 0.
double SubsampledRdp(int alpha, double gamma, double b);

// Additive composition over `eta` rounds.
double Compose(double epsilon_per_round, std::int64_t eta);

// (alpha, eps)-RDP -> (eps + log(1/delta)/(alpha-1), delta)-DP.
double RdpToDp(double epsilon_rdp, int alpha, double delta);

// Number of subsample rounds for a clipped log of `z` cases.
std::int64_t RoundCount(const PrivacyConfig& config, std::int64_t z);

struct PrivacyReport {
  int alpha = 0;
  double gamma = 0.0;
  double scale = 0.0;
  double delta = 0.0;
  double epsilon_laplace = 0.0;
  bool clipping_defined = false;  // false for an empty input (k == 0)
  double clipping_threshold = 0.0;
  std::int64_t variants_before = 0;
  std::int64_t variants_after = 0;
  std::int64_t cases_before = 0;
  std::int64_t cases_after = 0;  // z
  std::int64_t cases_output = 0;
  std::int64_t eta = 1;
  double epsilon_subsampled_rdp = 0.0;
  double epsilon_composed_rdp = 0.0;
  double epsilon_prime_dp = 0.0;
};

// Chains EpsLaplace -> ClippingThreshold -> SubsampledRdp -> Compose ->
// RdpToDp. `z` is the clipped case count and `k` the variant count of the
// input. The before/after counters other than z and k are left to the
// caller. k == 0 yields a report with every epsilon at 0.
PrivacyReport BuildReport(const PrivacyConfig& config, std::int64_t z, std::int64_t k);

// "key = value" lines, one per field, in declaration order.
std::string FormatReport(const PrivacyReport& report);

}  // namespace libra

#endif  // LIBRA_ACCOUNTANT_H_
