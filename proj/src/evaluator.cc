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

#include "libra/evaluator.h"

#include <algorithm>
#include <cmath>
#include <functional>
#include <numeric>
#include <utility>

#include "libra/error.h"

namespace libra {
namespace {

void CheckDistribution(const Distribution1D& d) {
  if (d.support.empty()) throw Error(ErrorCode::kEmptyDistribution, "empty distribution");
  if (d.support.size() != d.weights.size()) {
    throw Error(ErrorCode::kDomainError, "support and weights differ in length");
  }
  double total = 0.0;
  for (std::size_t i = 0; i < d.support.size(); ++i) {
    if (!std::isfinite(d.support[i])) {
      throw Error(ErrorCode::kDomainError, "non-finite support value");
    }
    if (!(d.weights[i] > 0.0) || !std::isfinite(d.weights[i])) {
      throw Error(ErrorCode::kDomainError, "weights must be positive and finite");
    }
    total += d.weights[i];
  }
  if (!(total > 0.0)) throw Error(ErrorCode::kDomainError, "total weight must be positive");
}

// Normalized (value, mass) pairs sorted by value.
std::vector<std::pair<double, double>> Normalized(const Distribution1D& d) {
  const double total = std::accumulate(d.weights.begin(), d.weights.end(), 0.0);
  std::vector<std::pair<double, double>> out;
  out.reserve(d.support.size());
  for (std::size_t i = 0; i < d.support.size(); ++i) {
    out.emplace_back(d.support[i], d.weights[i] / total);
  }
  std::sort(out.begin(), out.end());
  return out;
}

double DfgEmd(const Dfg& a, const Dfg& b, const std::function<double(const DfgEdge&)>& value) {
  std::vector<DfPair> keys;
  for (const auto& [k, _] : a) keys.push_back(k);
  for (const auto& [k, _] : b) keys.push_back(k);
  std::sort(keys.begin(), keys.end());
  keys.erase(std::unique(keys.begin(), keys.end()), keys.end());
  if (keys.empty()) throw Error(ErrorCode::kBothEmpty, "both DFGs are empty");

  Distribution1D u, v;
  for (const DfPair& k : keys) {
    const auto ia = a.find(k);
    const auto ib = b.find(k);
    u.support.push_back(ia == a.end() ? 0.0 : value(ia->second));
    v.support.push_back(ib == b.end() ? 0.0 : value(ib->second));
  }
  u.weights.assign(keys.size(), 1.0);
  v.weights.assign(keys.size(), 1.0);
  return Emd1d(u, v);
}

}  // namespace

Dfg BuildDfg(const EventLog& log) {
  // Integer seconds keep the totals independent of trace order.
  std::map<DfPair, std::int64_t> seconds;
  Dfg dfg;
  for (const Trace& t : log.traces()) {
    const auto& events = t.events();
    for (std::size_t i = 0; i + 1 < events.size(); ++i) {
      const DfPair key{events[i].activity, events[i + 1].activity};
      ++dfg[key].frequency;
      seconds[key] += (events[i + 1].timestamp - events[i].timestamp).count();
    }
  }
  for (auto& [key, edge] : dfg) {
    edge.total_duration_hours = static_cast<double>(seconds[key]) / kSecondsPerHour;
  }
  return dfg;
}

double Emd1d(const Distribution1D& u, const Distribution1D& v) {
  CheckDistribution(u);
  CheckDistribution(v);
  const auto pu = Normalized(u);
  const auto pv = Normalized(v);

  // Sweep the merged support; between consecutive points the CDF gap is
  // constant.
  std::size_t i = 0, j = 0;
  double cdf_u = 0.0, cdf_v = 0.0;
  double distance = 0.0;
  double prev = std::min(pu.front().first, pv.front().first);
  while (i < pu.size() || j < pv.size()) {
    const double x = std::min(i < pu.size() ? pu[i].first : INFINITY,
                              j < pv.size() ? pv[j].first : INFINITY);
    distance += std::abs(cdf_u - cdf_v) * (x - prev);
    while (i < pu.size() && pu[i].first == x) cdf_u += pu[i++].second;
    while (j < pv.size() && pv[j].first == x) cdf_v += pv[j++].second;
    prev = x;
  }
  return distance;
}

double EmdFrequency(const Dfg& a, const Dfg& b) {
  return DfgEmd(a, b, [](const DfgEdge& e) { return static_cast<double>(e.frequency); });
}

double EmdTime(const Dfg& a, const Dfg& b) {
  return DfgEmd(a, b, [](const DfgEdge& e) { return e.MeanDurationHours(); });
}

}  // namespace libra
