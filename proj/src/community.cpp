#include "rhythmform/community.h"

#include <algorithm>
#include <map>
#include <numeric>
#include <random>

#include "rhythmform/error.h"

namespace rhythmform {

namespace {

struct WeightedGraph {
  std::vector<std::vector<std::pair<int, double>>> adjacency;  // no self entries
  std::vector<double> self_loop;                               // internal weight per node
  std::vector<double> strength;                                // sum of adjacency + 2 * self_loop
  double total_weight = 0.0;                                   // m

  std::size_t size() const { return adjacency.size(); }
};

WeightedGraph fromGraph(const Graph& g) {
  WeightedGraph w;
  const std::size_t n = g.nodeCount();
  w.adjacency.resize(n);
  w.self_loop.assign(n, 0.0);
  w.strength.assign(n, 0.0);
  for (std::size_t u = 0; u < n; ++u) {
    for (std::size_t v : g.neighbors(u)) w.adjacency[u].emplace_back(static_cast<int>(v), 1.0);
    w.strength[u] = static_cast<double>(g.degree(u));
  }
  w.total_weight = static_cast<double>(g.edgeCount());
  return w;
}

double weightedModularity(const WeightedGraph& w, const std::vector<int>& community) {
  if (w.total_weight <= 0.0) return 0.0;
  const int k = *std::max_element(community.begin(), community.end()) + 1;
  std::vector<double> internal(k, 0.0), total(k, 0.0);
  for (std::size_t u = 0; u < w.size(); ++u) {
    const int c = community[u];
    total[c] += w.strength[u];
    internal[c] += w.self_loop[u];
    for (auto [v, weight] : w.adjacency[u]) {
      if (community[v] == c && static_cast<int>(u) < v) internal[c] += weight;
    }
  }
  const double m = w.total_weight;
  double q = 0.0;
  for (int c = 0; c < k; ++c) q += internal[c] / m - (total[c] / (2 * m)) * (total[c] / (2 * m));
  return q;
}

/// One round of local moves. Returns true when at least one node changed community.
bool localMoves(const WeightedGraph& w, std::vector<int>& community, std::mt19937_64& rng) {
  const std::size_t n = w.size();
  const double m2 = 2.0 * w.total_weight;
  std::vector<double> tot(n, 0.0);
  for (std::size_t u = 0; u < n; ++u) tot[community[u]] += w.strength[u];

  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::shuffle(order.begin(), order.end(), rng);

  std::vector<double> link(n, 0.0);
  std::vector<int> touched;
  bool any_move = false;
  bool moved = true;
  while (moved) {
    moved = false;
    for (std::size_t u : order) {
      const int home = community[u];
      const double ku = w.strength[u];
      touched.clear();
      for (auto [v, weight] : w.adjacency[u]) {
        const int c = community[v];
        if (link[c] == 0.0) touched.push_back(c);
        link[c] += weight;
      }
      tot[home] -= ku;
      int best = home;
      double best_gain = link[home] - tot[home] * ku / m2;
      for (int c : touched) {
        const double gain = link[c] - tot[c] * ku / m2;
        if (gain > best_gain + 1e-12) {
          best = c;
          best_gain = gain;
        }
      }
      tot[best] += ku;
      for (int c : touched) link[c] = 0.0;
      link[home] = 0.0;
      if (best != home) {
        community[u] = best;
        moved = true;
        any_move = true;
      }
    }
  }
  return any_move;
}

WeightedGraph aggregate(const WeightedGraph& w, const std::vector<int>& community, int k) {
  WeightedGraph out;
  out.adjacency.resize(k);
  out.self_loop.assign(k, 0.0);
  out.strength.assign(k, 0.0);
  out.total_weight = w.total_weight;
  std::vector<std::map<int, double>> links(k);
  for (std::size_t u = 0; u < w.size(); ++u) {
    const int cu = community[u];
    out.self_loop[cu] += w.self_loop[u];
    out.strength[cu] += w.strength[u];
    for (auto [v, weight] : w.adjacency[u]) {
      const int cv = community[v];
      if (cu == cv) {
        if (static_cast<int>(u) < v) out.self_loop[cu] += weight;
      } else {
        links[cu][cv] += weight;
      }
    }
  }
  for (int c = 0; c < k; ++c) out.adjacency[c].assign(links[c].begin(), links[c].end());
  return out;
}

}  // namespace

int Partition::communityCount() const {
  return community.empty() ? 0 : *std::max_element(community.begin(), community.end()) + 1;
}

std::vector<int> canonicalLabels(const std::vector<int>& labels) {
  std::map<int, int> remap;
  std::vector<int> out;
  out.reserve(labels.size());
  for (int l : labels) {
    auto [it, inserted] = remap.try_emplace(l, static_cast<int>(remap.size()));
    out.push_back(it->second);
  }
  return out;
}

double modularity(const Graph& g, const std::vector<int>& community) {
  if (community.size() != g.nodeCount()) {
    throw Error(ErrorKind::kArgument, "partition does not cover every node");
  }
  if (g.edgeCount() == 0) return 0.0;
  return weightedModularity(fromGraph(g), canonicalLabels(community));
}

Partition detectCommunities(const Graph& g, std::uint64_t seed) {
  const std::size_t n = g.nodeCount();
  Partition result;
  result.community.resize(n);
  std::iota(result.community.begin(), result.community.end(), 0);
  if (n == 0) return result;
  if (g.edgeCount() == 0) {
    result.level_modularity.push_back(0.0);
    return result;
  }

  const WeightedGraph original = fromGraph(g);
  WeightedGraph level = original;
  std::vector<int> node_to_community = result.community;
  std::mt19937_64 rng(seed);
  result.level_modularity.push_back(weightedModularity(original, node_to_community));

  for (;;) {
    std::vector<int> local(level.size());
    std::iota(local.begin(), local.end(), 0);
    if (!localMoves(level, local, rng)) break;
    local = canonicalLabels(local);
    const int k = *std::max_element(local.begin(), local.end()) + 1;
    for (int& c : node_to_community) c = local[c];
    result.level_modularity.push_back(weightedModularity(original, node_to_community));
    if (k == static_cast<int>(level.size())) break;
    level = aggregate(level, local, k);
  }
  result.community = canonicalLabels(node_to_community);
  result.modularity = weightedModularity(original, result.community);
  return result;
}

}  // namespace rhythmform
