#include "rhythmform/visibility.h"

#include <algorithm>

#include "rhythmform/error.h"

namespace rhythmform {

const char* timeAxisName(TimeAxis axis) { return axis == TimeAxis::kOnset ? "onset" : "index"; }

TimeAxis parseTimeAxis(const std::string& name) {
  if (name == "index") return TimeAxis::kIndex;
  if (name == "onset") return TimeAxis::kOnset;
  throw Error(ErrorKind::kArgument, "unknown time axis '" + name + "'");
}

DurationSeries durationSeries(const IOISeries& ioi, TimeAxis axis) {
  DurationSeries s;
  s.values.reserve(ioi.size());
  s.coords.reserve(ioi.size());
  for (std::size_t i = 0; i < ioi.size(); ++i) {
    s.values.push_back(static_cast<double>(ioi.values[i]));
    s.coords.push_back(axis == TimeAxis::kOnset ? static_cast<double>(ioi.starts[i]) : static_cast<double>(i));
  }
  return s;
}

bool Graph::addEdge(std::size_t u, std::size_t v) {
  if (u == v || u >= adjacency_.size() || v >= adjacency_.size()) return false;
  auto& a = adjacency_[u];
  auto it = std::lower_bound(a.begin(), a.end(), v);
  if (it != a.end() && *it == v) return false;
  a.insert(it, v);
  auto& b = adjacency_[v];
  b.insert(std::lower_bound(b.begin(), b.end(), u), u);
  ++edge_count_;
  return true;
}

bool Graph::hasEdge(std::size_t u, std::size_t v) const {
  if (u >= adjacency_.size()) return false;
  return std::binary_search(adjacency_[u].begin(), adjacency_[u].end(), v);
}

std::vector<std::pair<std::size_t, std::size_t>> Graph::edges() const {
  std::vector<std::pair<std::size_t, std::size_t>> out;
  out.reserve(edge_count_);
  for (std::size_t u = 0; u < adjacency_.size(); ++u) {
    for (std::size_t v : adjacency_[u]) {
      if (u < v) out.emplace_back(u, v);
    }
  }
  return out;
}

VisibilityGraph buildVisibility(const DurationSeries& series) {
  const std::size_t n = series.size();
  if (n < 2) throw Error(ErrorKind::kArgument, "visibility graph needs at least 2 points");
  if (series.coords.size() != n) throw Error(ErrorKind::kArgument, "values and coords differ in length");
  for (std::size_t i = 1; i < n; ++i) {
    if (!(series.coords[i] > series.coords[i - 1])) {
      throw Error(ErrorKind::kArgument, "visibility coordinates must be strictly increasing");
    }
  }
  VisibilityGraph vg{Graph(n), series};
  const auto& x = series.coords;
  const auto& y = series.values;
  for (std::size_t i = 0; i + 1 < n; ++i) {
    // Sweep j rightwards keeping the steepest slope seen from i. Slopes are
    // compared by cross-multiplication so equal slopes compare exactly.
    std::size_t steepest = i + 1;
    vg.graph.addEdge(i, i + 1);
    for (std::size_t j = i + 2; j < n; ++j) {
      const double lhs = (y[j] - y[i]) * (x[steepest] - x[i]);
      const double rhs = (y[steepest] - y[i]) * (x[j] - x[i]);
      if (lhs > rhs) {
        vg.graph.addEdge(i, j);
        steepest = j;
      }
    }
  }
  return vg;
}

}  // namespace rhythmform
