// Rhythmic heterogeneity: normalized permutation entropy of an IOI series
// where equal durations form their own ordinal categories.

#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <vector>

#include "rhythmform/score.h"

namespace rhythmform {

inline constexpr int kMinEmbeddingDim = 2;
inline constexpr int kMaxEmbeddingDim = 8;

/// Dense ranks of a window: equal values share a rank, ranks are 0..k-1.
struct OrdinalPattern {
  std::vector<std::uint8_t> ranks;

  auto operator<=>(const OrdinalPattern&) const = default;
};

OrdinalPattern ordinalPattern(std::span<const Tick> window);

/// Number of weak orderings of D items (ordered Bell / Fubini number):
/// 3, 13, 75, 541, 4683, 47293, 545835 for D = 2..8.
std::uint64_t countPatterns(int dim);

struct PatternDistribution {
  std::map<OrdinalPattern, std::size_t> counts;
  int dim = 0;
  std::size_t total = 0;

  double probability(const OrdinalPattern& p) const;
};

/// Slides a length-`dim` window by `stride`. Returns nullopt when the series
/// is shorter than one window.
std::optional<PatternDistribution> patternDistribution(const IOISeries& ioi, int dim, int stride = 1);
std::optional<PatternDistribution> patternDistribution(std::span<const Tick> values, int dim, int stride = 1);

/// -sum p ln p / ln N_D, in [0, 1].
double permutationEntropy(const PatternDistribution& dist);

/// Pattern distribution followed by entropy; nullopt on insufficient data.
std::optional<double> heterogeneity(std::span<const Tick> values, int dim, int stride = 1);

}  // namespace rhythmform
