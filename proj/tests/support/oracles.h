// Independent reference implementations used as test oracles. None of these
// call into the library code they check.

#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <functional>
#include <limits>
#include <set>
#include <utility>
#include <vector>

namespace rhythmform::testing {

/// Exact min-cost transport between two integer mass vectors on a line
/// (cost |i - j| per unit), solved as a min-cost flow with successive
/// Bellman-Ford shortest paths over the complete bipartite graph.
inline std::int64_t bruteForceTransport(const std::vector<std::int64_t>& supply,
                                        const std::vector<std::int64_t>& demand) {
  const int n = static_cast<int>(supply.size());
  const int m = static_cast<int>(demand.size());
  const int source = n + m, sink = n + m + 1, nodes = n + m + 2;
  struct Arc {
    int to;
    std::int64_t cap;
    std::int64_t cost;
  };
  std::vector<Arc> arcs;
  std::vector<std::vector<int>> out(nodes);
  auto add = [&](int a, int b, std::int64_t cap, std::int64_t cost) {
    out[a].push_back(static_cast<int>(arcs.size()));
    arcs.push_back({b, cap, cost});
    out[b].push_back(static_cast<int>(arcs.size()));
    arcs.push_back({a, 0, -cost});
  };
  for (int i = 0; i < n; ++i) add(source, i, supply[i], 0);
  for (int j = 0; j < m; ++j) add(n + j, sink, demand[j], 0);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < m; ++j) add(i, n + j, std::numeric_limits<std::int64_t>::max() / 4, std::abs(i - j));

  std::int64_t total_cost = 0;
  for (;;) {
    std::vector<std::int64_t> dist(nodes, std::numeric_limits<std::int64_t>::max());
    std::vector<int> via(nodes, -1);
    dist[source] = 0;
    for (int iter = 0; iter < nodes; ++iter) {
      bool changed = false;
      for (int u = 0; u < nodes; ++u) {
        if (dist[u] == std::numeric_limits<std::int64_t>::max()) continue;
        for (int a : out[u]) {
          if (arcs[a].cap > 0 && dist[u] + arcs[a].cost < dist[arcs[a].to]) {
            dist[arcs[a].to] = dist[u] + arcs[a].cost;
            via[arcs[a].to] = a;
            changed = true;
          }
        }
      }
      if (!changed) break;
    }
    if (via[sink] < 0) break;
    std::int64_t push = std::numeric_limits<std::int64_t>::max();
    for (int v = sink; v != source; v = arcs[via[v] ^ 1].to) push = std::min(push, arcs[via[v]].cap);
    for (int v = sink; v != source; v = arcs[via[v] ^ 1].to) {
      arcs[via[v]].cap -= push;
      arcs[via[v] ^ 1].cap += push;
    }
    total_cost += push * dist[sink];
  }
  return total_cost;
}

/// Visibility straight from the sightline definition, O(n^3).
inline std::set<std::pair<std::size_t, std::size_t>> bruteForceVisibility(const std::vector<double>& y,
                                                                         const std::vector<double>& x) {
  std::set<std::pair<std::size_t, std::size_t>> edges;
  for (std::size_t i = 0; i < y.size(); ++i) {
    for (std::size_t j = i + 1; j < y.size(); ++j) {
      bool visible = true;
      for (std::size_t k = i + 1; k < j && visible; ++k) {
        if (!(y[k] < y[j] + (y[i] - y[j]) * (x[j] - x[k]) / (x[j] - x[i]))) visible = false;
      }
      if (visible) edges.emplace(i, j);
    }
  }
  return edges;
}

/// Number of distinct tie-aware orderings among all tuples in {1..D}^D,
/// identified by their pairwise comparison sign matrix.
inline std::size_t enumerateWeakOrderings(int d) {
  std::set<std::vector<int>> seen;
  std::vector<int> tuple(d, 1);
  for (;;) {
    std::vector<int> signs;
    for (int i = 0; i < d; ++i)
      for (int j = i + 1; j < d; ++j) signs.push_back((tuple[i] > tuple[j]) - (tuple[i] < tuple[j]));
    seen.insert(signs);
    int pos = 0;
    while (pos < d && ++tuple[pos] > d) tuple[pos++] = 1;
    if (pos == d) break;
  }
  return seen.size();
}

/// Modularity from the textbook double sum (1/2m) sum_ij [A_ij - k_i k_j / 2m] delta(c_i, c_j).
inline double directModularity(const std::vector<std::vector<int>>& adj, const std::vector<int>& community) {
  const std::size_t n = adj.size();
  double two_m = 0;
  std::vector<double> k(n, 0);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) k[i] += adj[i][j];
    two_m += k[i];
  }
  if (two_m == 0) return 0.0;
  double q = 0;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (community[i] == community[j]) q += adj[i][j] - k[i] * k[j] / two_m;
  return q / two_m;
}

/// Calls `visit` with every set partition of {0..n-1} as a restricted growth string.
inline void forEachSetPartition(std::size_t n, const std::function<void(const std::vector<int>&)>& visit) {
  std::vector<int> labels(n, 0);
  std::function<void(std::size_t, int)> rec = [&](std::size_t pos, int max_label) {
    if (pos == n) {
      visit(labels);
      return;
    }
    for (int c = 0; c <= max_label + 1; ++c) {
      labels[pos] = c;
      rec(pos + 1, std::max(max_label, c));
    }
  };
  if (n == 0) return;
  rec(1, 0);
}

inline double exhaustiveBestModularity(const std::vector<std::vector<int>>& adj) {
  double best = -1.0;
  forEachSetPartition(adj.size(), [&](const std::vector<int>& p) { best = std::max(best, directModularity(adj, p)); });
  return best;
}

}  // namespace rhythmform::testing
