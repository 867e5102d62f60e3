// Natural visibility graph of a duration series.

#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "rhythmform/score.h"

namespace rhythmform {

/// Heights y_i placed at strictly increasing abscissae x_i.
struct DurationSeries {
  std::vector<double> values;
  std::vector<double> coords;

  std::size_t size() const { return values.size(); }
};

enum class TimeAxis { kIndex, kOnset };

const char* timeAxisName(TimeAxis axis);
TimeAxis parseTimeAxis(const std::string& name);

/// Durations of an IOI series placed at event indices or onset ticks.
DurationSeries durationSeries(const IOISeries& ioi, TimeAxis axis);

/// Simple undirected graph with sorted adjacency lists.
class Graph {
 public:
  explicit Graph(std::size_t n = 0) : adjacency_(n) {}

  std::size_t nodeCount() const { return adjacency_.size(); }
  std::size_t edgeCount() const { return edge_count_; }

  /// Adds {u, v}; ignores self-loops and duplicates. Returns true if added.
  bool addEdge(std::size_t u, std::size_t v);
  bool hasEdge(std::size_t u, std::size_t v) const;
  const std::vector<std::size_t>& neighbors(std::size_t u) const { return adjacency_[u]; }
  std::size_t degree(std::size_t u) const { return adjacency_[u].size(); }
  /// Edges as (u, v) with u < v in lexicographic order.
  std::vector<std::pair<std::size_t, std::size_t>> edges() const;

  bool operator==(const Graph&) const = default;

 private:
  std::vector<std::vector<std::size_t>> adjacency_;
  std::size_t edge_count_ = 0;
};

struct VisibilityGraph {
  Graph graph;
  DurationSeries series;
};

/// i < j are adjacent iff every k between them lies strictly below the
/// sightline from (x_i, y_i) to (x_j, y_j). Collinear points block.
VisibilityGraph buildVisibility(const DurationSeries& series);

}  // namespace rhythmform
