#include "rhythmform/heterogeneity.h"

#include <algorithm>
#include <cmath>

#include "rhythmform/error.h"

namespace rhythmform {

namespace {

void checkDim(int dim) {
  if (dim < kMinEmbeddingDim || dim > kMaxEmbeddingDim) {
    throw Error(ErrorKind::kArgument, "embedding dimension must be in [" + std::to_string(kMinEmbeddingDim) +
                                          ", " + std::to_string(kMaxEmbeddingDim) + "], got " +
                                          std::to_string(dim));
  }
}

}  // namespace

OrdinalPattern ordinalPattern(std::span<const Tick> window) {
  if (window.size() < static_cast<std::size_t>(kMinEmbeddingDim)) {
    throw Error(ErrorKind::kArgument, "ordinal pattern needs a window of at least 2 values");
  }
  std::vector<Tick> sorted(window.begin(), window.end());
  std::sort(sorted.begin(), sorted.end());
  sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
  OrdinalPattern p;
  p.ranks.reserve(window.size());
  for (Tick v : window) {
    p.ranks.push_back(static_cast<std::uint8_t>(std::lower_bound(sorted.begin(), sorted.end(), v) - sorted.begin()));
  }
  return p;
}

std::uint64_t countPatterns(int dim) {
  checkDim(dim);
  // a(n) = sum_{k=1..n} C(n,k) a(n-k), a(0) = 1
  std::vector<std::uint64_t> a(dim + 1, 0);
  a[0] = 1;
  for (int n = 1; n <= dim; ++n) {
    std::uint64_t binom = 1;
    for (int k = 1; k <= n; ++k) {
      binom = binom * (n - k + 1) / k;
      a[n] += binom * a[n - k];
    }
  }
  return a[dim];
}

double PatternDistribution::probability(const OrdinalPattern& p) const {
  auto it = counts.find(p);
  return it == counts.end() || total == 0 ? 0.0 : static_cast<double>(it->second) / static_cast<double>(total);
}

std::optional<PatternDistribution> patternDistribution(std::span<const Tick> values, int dim, int stride) {
  checkDim(dim);
  if (stride < 1) throw Error(ErrorKind::kArgument, "stride must be >= 1");
  if (values.size() < static_cast<std::size_t>(dim)) return std::nullopt;
  PatternDistribution dist;
  dist.dim = dim;
  for (std::size_t i = 0; i + dim <= values.size(); i += stride) {
    ++dist.counts[ordinalPattern(values.subspan(i, dim))];
    ++dist.total;
  }
  return dist;
}

std::optional<PatternDistribution> patternDistribution(const IOISeries& ioi, int dim, int stride) {
  return patternDistribution(std::span<const Tick>(ioi.values), dim, stride);
}

double permutationEntropy(const PatternDistribution& dist) {
  if (dist.total == 0) throw Error(ErrorKind::kEmptySeries, "empty pattern distribution");
  double h = 0.0;
  for (const auto& [pattern, count] : dist.counts) {
    if (count == 0) continue;
    const double p = static_cast<double>(count) / static_cast<double>(dist.total);
    h -= p * std::log(p);
  }
  const double normalized = h / std::log(static_cast<double>(countPatterns(dist.dim)));
  return std::clamp(normalized, 0.0, 1.0);
}

std::optional<double> heterogeneity(std::span<const Tick> values, int dim, int stride) {
  auto dist = patternDistribution(values, dim, stride);
  if (!dist) return std::nullopt;
  return permutationEntropy(*dist);
}

}  // namespace rhythmform
