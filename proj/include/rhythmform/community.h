// Modularity and Louvain community detection.

#pragma once

#include <cstdint>
#include <vector>

#include "rhythmform/visibility.h"

namespace rhythmform {

inline constexpr std::uint64_t kDefaultSeed = 42;

struct Partition {
  /// Community id per node, contiguous from 0 in order of first appearance.
  std::vector<int> community;
  double modularity = 0.0;
  /// Modularity of the original graph after each aggregation level.
  std::vector<double> level_modularity;

  int communityCount() const;
};

/// Newman-Girvan modularity (resolution 1). Zero for an edgeless graph.
double modularity(const Graph& g, const std::vector<int>& community);

/// Louvain: local node moves in a seeded order, then aggregation, repeated
/// until a level moves no node.
Partition detectCommunities(const Graph& g, std::uint64_t seed = kDefaultSeed);

/// Renumbers labels to 0..k-1 by first appearance.
std::vector<int> canonicalLabels(const std::vector<int>& labels);

}  // namespace rhythmform
