#include "rhythmform/graph_metrics.h"

#include <algorithm>
#include <cmath>

namespace rhythmform {

std::map<int, double> degreeCorrelation(const Graph& g) {
  std::map<int, std::pair<double, int>> acc;
  for (std::size_t u = 0; u < g.nodeCount(); ++u) {
    const auto& nbrs = g.neighbors(u);
    if (nbrs.empty()) continue;
    double sum = 0.0;
    for (std::size_t v : nbrs) sum += static_cast<double>(g.degree(v));
    auto& [total, count] = acc[static_cast<int>(nbrs.size())];
    total += sum / static_cast<double>(nbrs.size());
    ++count;
  }
  std::map<int, double> out;
  for (const auto& [k, tc] : acc) out[k] = tc.first / tc.second;
  return out;
}

std::optional<PowerLawFit> powerlawFit(const std::map<int, double>& correlation) {
  std::vector<std::pair<double, double>> pts;
  for (const auto& [k, km] : correlation) {
    if (k > 0 && km > 0.0) pts.emplace_back(std::log(static_cast<double>(k)), std::log(km));
  }
  if (pts.size() < 2) return std::nullopt;
  const double n = static_cast<double>(pts.size());
  double sx = 0, sy = 0;
  for (auto [x, y] : pts) {
    sx += x;
    sy += y;
  }
  const double mx = sx / n, my = sy / n;
  double sxx = 0, sxy = 0;
  for (auto [x, y] : pts) {
    sxx += (x - mx) * (x - mx);
    sxy += (x - mx) * (y - my);
  }
  if (sxx <= 0.0) return std::nullopt;
  PowerLawFit fit;
  fit.b = sxy / sxx;
  fit.a = std::exp(my - fit.b * mx);
  return fit;
}

std::optional<double> assortativity(const Graph& g) {
  if (g.edgeCount() == 0) return std::nullopt;
  // Over both orientations the two marginals coincide, so a single mean and
  // variance serve for x and y.
  double s1 = 0, s2 = 0, sxy = 0;
  double count = 0;
  for (auto [u, v] : g.edges()) {
    const double du = static_cast<double>(g.degree(u));
    const double dv = static_cast<double>(g.degree(v));
    s1 += du + dv;
    s2 += du * du + dv * dv;
    sxy += 2 * du * dv;
    count += 2;
  }
  const double mean = s1 / count;
  const double var = s2 / count - mean * mean;
  if (var <= 1e-12 * std::max(1.0, mean * mean)) return std::nullopt;
  const double r = (sxy / count - mean * mean) / var;
  return std::clamp(r, -1.0, 1.0);
}

std::size_t triangleCount(const Graph& g) {
  std::size_t triangles = 0;
  for (std::size_t u = 0; u < g.nodeCount(); ++u) {
    const auto& nu = g.neighbors(u);
    for (std::size_t v : nu) {
      if (v <= u) continue;
      const auto& nv = g.neighbors(v);
      // Count w > v adjacent to both.
      auto a = std::upper_bound(nu.begin(), nu.end(), v);
      auto b = std::upper_bound(nv.begin(), nv.end(), v);
      while (a != nu.end() && b != nv.end()) {
        if (*a < *b) {
          ++a;
        } else if (*b < *a) {
          ++b;
        } else {
          ++triangles;
          ++a;
          ++b;
        }
      }
    }
  }
  return triangles;
}

double transitivity(const Graph& g) {
  double triples = 0;
  for (std::size_t u = 0; u < g.nodeCount(); ++u) {
    const double d = static_cast<double>(g.degree(u));
    triples += d * (d - 1) / 2;
  }
  if (triples == 0) return 0.0;
  return std::clamp(3.0 * static_cast<double>(triangleCount(g)) / triples, 0.0, 1.0);
}

}  // namespace rhythmform
