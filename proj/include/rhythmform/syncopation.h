// Syncopation: normalized 1-D earth mover's distance between the histogram of
// per-measure off-beat proportions and the all-on-beat histogram.

#pragma once

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "rhythmform/score.h"

namespace rhythmform {

inline constexpr int kDefaultBins = 11;

struct BeatSpec {
  Tick beat_length = 0;
  Tick tolerance = 0;
};

/// Fraction of `onsets` that do not land within `tolerance` of a multiple of
/// the beat counted from `measure.origin`. Returns nullopt for an empty
/// measure. Throws Error(kArgument) for onsets outside [start, end).
std::optional<double> offbeatProportion(std::span<const Tick> onsets, const Measure& measure, const BeatSpec& beat);

struct OffbeatHistogram {
  std::vector<double> bins;

  int size() const { return static_cast<int>(bins.size()); }
};

/// Assigns each proportion to the bin with the nearest centre k/(N-1), ties
/// going to the lower bin, and normalizes the mass to 1.
OffbeatHistogram offbeatHistogram(std::span<const double> proportions, int bins = kDefaultBins);

/// Delta histogram at bin `k`.
OffbeatHistogram deltaHistogram(int k, int bins = kDefaultBins);

/// sum_k |CumSum(P - R)_k| with unit spacing between adjacent bins.
double emd1d(const OffbeatHistogram& p, const OffbeatHistogram& r);

/// EMD to the all-on-beat histogram divided by N_bins - 1.
double syncopation(const OffbeatHistogram& p_off);

enum class EmptyMeasurePolicy { kSkip, kZero };

const char* emptyMeasurePolicyName(EmptyMeasurePolicy policy);
EmptyMeasurePolicy parseEmptyMeasurePolicy(const std::string& name);

struct SyncopationOptions {
  int bins = kDefaultBins;
  Tick tolerance = 0;
  EmptyMeasurePolicy empty_measure = EmptyMeasurePolicy::kSkip;
};

/// Per-measure off-beat proportions of `onsets` for measures
/// [first_measure, last_measure) of `grid`.
std::vector<double> measureProportions(std::span<const Tick> onsets, const MeasureGrid& grid,
                                       std::size_t first_measure, std::size_t last_measure,
                                       const SyncopationOptions& options);

/// Q over a measure range; nullopt when no measure contributed.
std::optional<double> syncopationOfMeasures(std::span<const Tick> onsets, const MeasureGrid& grid,
                                            std::size_t first_measure, std::size_t last_measure,
                                            const SyncopationOptions& options);

}  // namespace rhythmform
