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

#include "libra/accountant.h"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <limits>
#include <sstream>
#include <vector>

#include "libra/error.h"

namespace libra {
namespace {

constexpr double kNegInf = -std::numeric_limits<double>::infinity();

void Require(bool ok, const char* what) {
  if (!ok) throw Error(ErrorCode::kDomainError, what);
}

double LogBinomial(int n, int k) {
  return std::lgamma(n + 1.0) - std::lgamma(k + 1.0) - std::lgamma(n - k + 1.0);
}

// k * log(1 - g), with 0 * log(0) taken as 0.
double LogOneMinusPow(int k, double g) {
  if (k == 0) return 0.0;
  if (g >= 1.0) return kNegInf;
  return k * std::log1p(-g);
}

// log(sum exp(terms)), skipping -inf entries. Written as
// max + log1p(sum of the rest) so sums close to 1 keep their precision.
double LogSumExp(const std::vector<double>& terms) {
  const auto max_it = std::max_element(terms.begin(), terms.end());
  if (max_it == terms.end() || *max_it == kNegInf) return kNegInf;
  double rest = 0.0;
  for (auto it = terms.begin(); it != terms.end(); ++it) {
    if (it == max_it || *it == kNegInf) continue;
    rest += std::exp(*it - *max_it);
  }
  return *max_it + std::log1p(rest);
}

std::string FormatDouble(double v) {
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof(buf), v);
  return std::string(buf, res.ptr);
}

}  // namespace

void PrivacyConfig::Validate() const {
  Require(alpha >= 2, "alpha must be an integer >= 2");
  Require(delta > 0.0 && delta < 1.0, "delta must lie in (0, 1)");
  Require(gamma > 0.0 && gamma <= 1.0, "gamma must lie in (0, 1]");
  Require(std::isfinite(scale) && scale > 0.0, "scale must be > 0");
  Require(std::isfinite(omega) && omega >= 0.0, "omega must be >= 0");
  Require(rho > 0.0 && rho < 1.0, "rho must lie in (0, 1)");
  Require(p_hat > 0.0 && p_hat < 1.0, "p_hat must lie in (0, 1)");
}

double EpsLaplace(int alpha, double b) {
  Require(alpha >= 2, "EpsLaplace: alpha must be >= 2");
  Require(b > 0.0 && !std::isnan(b), "EpsLaplace: b must be > 0");
  const double a = alpha;
  const double log_sum = LogSumExp({std::log(a / (2 * a - 1)) + (a - 1) / b,
                                    std::log((a - 1) / (2 * a - 1)) - a / b});
  return std::max(0.0, log_sum / (a - 1));
}

double ClippingThreshold(double epsilon, double delta, std::int64_t k) {
  Require(epsilon > 0.0 && std::isfinite(epsilon), "ClippingThreshold: epsilon must be > 0");
  Require(delta > 0.0 && delta < 1.0, "ClippingThreshold: delta must lie in (0, 1)");
  Require(k >= 1, "ClippingThreshold: k must be >= 1");
  return std::log(2.0 * static_cast<double>(k) / delta) / epsilon;
}

std::pair<double, double> AmplifySimple(double epsilon, double delta, double gamma) {
  if (gamma >= 1.0) return {epsilon, delta};
  // The bound never exceeds epsilon; min() absorbs log1p/expm1 rounding.
  return {std::min(epsilon, std::log1p(gamma * std::expm1(epsilon))), gamma * delta};
}

double SubsampledRdp(int alpha, double gamma, double b) {
  Require(alpha >= 2, "SubsampledRdp: alpha must be >= 2");
  Require(gamma >= 0.0 && gamma <= 1.0, "SubsampledRdp: gamma must lie in [0, 1]");
  Require(b > 0.0 && !std::isnan(b), "SubsampledRdp: b must be > 0");
  if (gamma == 0.0) return 0.0;

  const double log_g = std::log(gamma);
  std::vector<double> terms;
  terms.reserve(alpha);
  terms.push_back(LogOneMinusPow(alpha - 1, gamma) + std::log1p((alpha - 1) * gamma));
  terms.push_back(LogBinomial(alpha, 2) + 2 * log_g + LogOneMinusPow(alpha - 2, gamma) +
                  EpsLaplace(2, b));
  for (int j = 3; j <= alpha; ++j) {
    terms.push_back(std::log(3.0) + LogBinomial(alpha, j) + LogOneMinusPow(alpha - j, gamma) +
                    j * log_g + (j - 1) * EpsLaplace(j, b));
  }
  return std::max(0.0, LogSumExp(terms) / (alpha - 1));
}

double Compose(double epsilon_per_round, std::int64_t eta) {
  return static_cast<double>(eta) * epsilon_per_round;
}

double RdpToDp(double epsilon_rdp, int alpha, double delta) {
  return epsilon_rdp + std::log(1.0 / delta) / (alpha - 1);
}

std::int64_t RoundCount(const PrivacyConfig& config, std::int64_t z) {
  if (config.eta_literal) {
    const auto rounds = static_cast<std::int64_t>(std::ceil(config.gamma * static_cast<double>(z)));
    return std::max<std::int64_t>(1, rounds);
  }
  return std::max<std::int64_t>(1, static_cast<std::int64_t>(std::ceil(1.0 / config.gamma)));
}

PrivacyReport BuildReport(const PrivacyConfig& config, std::int64_t z, std::int64_t k) {
  config.Validate();
  Require(z >= 0 && k >= 0, "BuildReport: counts must be non-negative");
  PrivacyReport r;
  r.alpha = config.alpha;
  r.gamma = config.gamma;
  r.scale = config.scale;
  r.delta = config.delta;
  r.variants_before = k;
  r.cases_after = z;
  r.eta = RoundCount(config, z);
  if (k == 0) return r;

  r.epsilon_laplace = EpsLaplace(config.alpha, config.scale);
  r.clipping_defined = true;
  r.clipping_threshold = ClippingThreshold(r.epsilon_laplace, config.delta, k);
  r.epsilon_subsampled_rdp = SubsampledRdp(config.alpha, config.gamma, config.scale);
  r.epsilon_composed_rdp = Compose(r.epsilon_subsampled_rdp, r.eta);
  r.epsilon_prime_dp = RdpToDp(r.epsilon_composed_rdp, config.alpha, config.delta);
  return r;
}

std::string FormatReport(const PrivacyReport& r) {
  std::ostringstream out;
  auto line = [&](const char* key, const std::string& value) {
    out << key << " = " << value << '\n';
  };
  line("alpha", std::to_string(r.alpha));
  line("gamma", FormatDouble(r.gamma));
  line("scale", FormatDouble(r.scale));
  line("delta", FormatDouble(r.delta));
  line("epsilon_laplace", FormatDouble(r.epsilon_laplace));
  line("clipping_threshold", r.clipping_defined ? FormatDouble(r.clipping_threshold) : "undefined");
  line("variants_before", std::to_string(r.variants_before));
  line("variants_after", std::to_string(r.variants_after));
  line("cases_before", std::to_string(r.cases_before));
  line("cases_after", std::to_string(r.cases_after));
  line("cases_output", std::to_string(r.cases_output));
  line("eta", std::to_string(r.eta));
  line("epsilon_subsampled_rdp", FormatDouble(r.epsilon_subsampled_rdp));
  line("epsilon_composed_rdp", FormatDouble(r.epsilon_composed_rdp));
  line("epsilon_prime_dp", FormatDouble(r.epsilon_prime_dp));
  return out.str();
}

}  // namespace libra
