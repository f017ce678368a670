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

#include "oracles.h"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>

#include <boost/multiprecision/cpp_dec_float.hpp>
#include <boost/multiprecision/cpp_int.hpp>

namespace libra::testing {
namespace {

using Big = boost::multiprecision::cpp_dec_float_50;
using boost::multiprecision::cpp_int;

Big EpsLaplaceBig(int alpha, const Big& b) {
  const Big a = alpha;
  const Big inner = a / (2 * a - 1) * exp((a - 1) / b) + (a - 1) / (2 * a - 1) * exp(-a / b);
  return log(inner) / (a - 1);
}

cpp_int Binomial(int n, int k) {
  cpp_int r = 1;
  for (int i = 1; i <= k; ++i) {
    r *= n - k + i;
    r /= i;
  }
  return r;
}

Big Pow(const Big& base, int e) {
  Big r = 1;
  for (int i = 0; i < e; ++i) r *= base;
  return r;
}

struct Edge {
  int to;
  double cap;
  double cost;
  int rev;
};

}  // namespace

double EpsLaplaceOracle(int alpha, double b) {
  return static_cast<double>(EpsLaplaceBig(alpha, Big(b)));
}

double SubsampledRdpOracle(int alpha, double gamma, double b) {
  const Big g(gamma), bb(b), one(1);
  const Big q = one - g;
  Big sum = Pow(q, alpha - 1) * (Big(alpha) * g - g + 1);
  sum += Big(Binomial(alpha, 2)) * Pow(g, 2) * Pow(q, alpha - 2) * exp(EpsLaplaceBig(2, bb));
  for (int j = 3; j <= alpha; ++j) {
    sum += 3 * Big(Binomial(alpha, j)) * Pow(q, alpha - j) * Pow(g, j) *
           exp((j - 1) * EpsLaplaceBig(j, bb));
  }
  return static_cast<double>(log(sum) / (alpha - 1));
}

double TransportOracle(const std::vector<double>& xs, const std::vector<double>& wx,
                       const std::vector<double>& ys, const std::vector<double>& wy) {
  const double sx = std::accumulate(wx.begin(), wx.end(), 0.0);
  const double sy = std::accumulate(wy.begin(), wy.end(), 0.0);
  const int n = static_cast<int>(xs.size());
  const int m = static_cast<int>(ys.size());
  const int source = n + m, sink = n + m + 1, nodes = n + m + 2;
  std::vector<std::vector<Edge>> g(nodes);
  auto add = [&](int u, int v, double cap, double cost) {
    g[u].push_back({v, cap, cost, static_cast<int>(g[v].size())});
    g[v].push_back({u, 0.0, -cost, static_cast<int>(g[u].size()) - 1});
  };
  for (int i = 0; i < n; ++i) add(source, i, wx[i] / sx, 0.0);
  for (int j = 0; j < m; ++j) add(n + j, sink, wy[j] / sy, 0.0);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < m; ++j) add(i, n + j, 2.0, std::abs(xs[i] - ys[j]));
  }

  constexpr double kEps = 1e-15;
  double total_cost = 0.0, flow = 0.0;
  while (flow < 1.0 - 1e-13) {
    std::vector<double> dist(nodes, std::numeric_limits<double>::infinity());
    std::vector<int> prev_node(nodes, -1), prev_edge(nodes, -1);
    dist[source] = 0.0;
    for (int iter = 0; iter < nodes; ++iter) {
      bool changed = false;
      for (int u = 0; u < nodes; ++u) {
        if (std::isinf(dist[u])) continue;
        for (int e = 0; e < static_cast<int>(g[u].size()); ++e) {
          const Edge& ed = g[u][e];
          if (ed.cap > kEps && dist[u] + ed.cost < dist[ed.to] - 1e-15) {
            dist[ed.to] = dist[u] + ed.cost;
            prev_node[ed.to] = u;
            prev_edge[ed.to] = e;
            changed = true;
          }
        }
      }
      if (!changed) break;
    }
    if (std::isinf(dist[sink])) break;
    double push = 1.0 - flow;
    for (int v = sink; v != source; v = prev_node[v]) {
      push = std::min(push, g[prev_node[v]][prev_edge[v]].cap);
    }
    for (int v = sink; v != source; v = prev_node[v]) {
      Edge& ed = g[prev_node[v]][prev_edge[v]];
      ed.cap -= push;
      g[v][ed.rev].cap += push;
      total_cost += push * ed.cost;
    }
    flow += push;
  }
  return total_cost;
}

double KsStatistic(std::vector<double> samples, const std::function<double(double)>& cdf) {
  std::sort(samples.begin(), samples.end());
  const double n = static_cast<double>(samples.size());
  double d = 0.0;
  for (std::size_t i = 0; i < samples.size(); ++i) {
    const double f = cdf(samples[i]);
    d = std::max({d, (i + 1) / n - f, f - i / n});
  }
  return d;
}

double KsPValue(double d, std::size_t n) {
  const double sn = std::sqrt(static_cast<double>(n));
  const double lambda = (sn + 0.12 + 0.11 / sn) * d;
  double sum = 0.0;
  for (int k = 1; k <= 100; ++k) {
    const double term = std::exp(-2.0 * k * k * lambda * lambda);
    sum += (k % 2 == 1 ? term : -term);
    if (term < 1e-16) break;
  }
  return std::clamp(2.0 * sum, 0.0, 1.0);
}

double ChiSquare1PValue(double statistic) { return std::erfc(std::sqrt(statistic / 2.0)); }

}  // namespace libra::testing
