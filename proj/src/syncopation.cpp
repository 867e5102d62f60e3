#include "rhythmform/syncopation.h"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "rhythmform/error.h"

namespace rhythmform {

std::optional<double> offbeatProportion(std::span<const Tick> onsets, const Measure& measure, const BeatSpec& beat) {
  if (beat.beat_length <= 0) throw Error(ErrorKind::kArgument, "beat length must be positive");
  if (beat.tolerance < 0 || 2 * beat.tolerance >= beat.beat_length) {
    throw Error(ErrorKind::kArgument, "tolerance must be in [0, beat_length/2)");
  }
  if (onsets.empty()) return std::nullopt;
  std::size_t off = 0;
  for (Tick o : onsets) {
    if (o < measure.start || o >= measure.end) {
      throw Error(ErrorKind::kArgument, "onset " + std::to_string(o) + " lies outside measure [" +
                                            std::to_string(measure.start) + ", " + std::to_string(measure.end) + ")");
    }
    const Tick r = (o - measure.origin) % beat.beat_length;
    const bool on_beat = r <= beat.tolerance || beat.beat_length - r <= beat.tolerance;
    if (!on_beat) ++off;
  }
  return static_cast<double>(off) / static_cast<double>(onsets.size());
}

OffbeatHistogram offbeatHistogram(std::span<const double> proportions, int bins) {
  if (bins < 2) throw Error(ErrorKind::kArgument, "histogram needs at least 2 bins");
  if (proportions.empty()) throw Error(ErrorKind::kEmptyPiece, "no measure contributed an off-beat proportion");
  std::vector<std::size_t> counts(bins, 0);
  for (double p : proportions) {
    if (!(p >= 0.0 && p <= 1.0)) throw Error(ErrorKind::kArgument, "proportion outside [0, 1]");
    // Nearest centre with ties to the lower bin; the epsilon absorbs
    // representation error on exact ties such as 0.25 * 10.
    const double x = p * (bins - 1);
    int k = static_cast<int>(std::ceil(x - 0.5 - 1e-9));
    ++counts[std::clamp(k, 0, bins - 1)];
  }
  OffbeatHistogram h;
  for (std::size_t c : counts) h.bins.push_back(static_cast<double>(c) / static_cast<double>(proportions.size()));
  return h;
}

OffbeatHistogram deltaHistogram(int k, int bins) {
  if (bins < 2 || k < 0 || k >= bins) throw Error(ErrorKind::kArgument, "delta bin out of range");
  OffbeatHistogram h;
  h.bins.assign(bins, 0.0);
  h.bins[k] = 1.0;
  return h;
}

double emd1d(const OffbeatHistogram& p, const OffbeatHistogram& r) {
  if (p.bins.size() != r.bins.size()) {
    throw Error(ErrorKind::kArgument, "histograms have different bin counts");
  }
  double carried = 0.0;
  double cost = 0.0;
  for (std::size_t k = 0; k < p.bins.size(); ++k) {
    carried += p.bins[k] - r.bins[k];
    cost += std::abs(carried);
  }
  return cost;
}

double syncopation(const OffbeatHistogram& p_off) {
  const double q = emd1d(p_off, deltaHistogram(0, p_off.size())) / (p_off.size() - 1);
  return std::clamp(q, 0.0, 1.0);
}

const char* emptyMeasurePolicyName(EmptyMeasurePolicy policy) {
  return policy == EmptyMeasurePolicy::kZero ? "zero" : "skip";
}

EmptyMeasurePolicy parseEmptyMeasurePolicy(const std::string& name) {
  if (name == "skip") return EmptyMeasurePolicy::kSkip;
  if (name == "zero") return EmptyMeasurePolicy::kZero;
  throw Error(ErrorKind::kArgument, "unknown empty-measure policy '" + name + "'");
}

std::vector<double> measureProportions(std::span<const Tick> onsets, const MeasureGrid& grid,
                                       std::size_t first_measure, std::size_t last_measure,
                                       const SyncopationOptions& options) {
  std::vector<double> out;
  last_measure = std::min(last_measure, grid.size());
  for (std::size_t m = first_measure; m < last_measure; ++m) {
    const Measure& measure = grid.measures[m];
    auto lo = std::lower_bound(onsets.begin(), onsets.end(), measure.start);
    auto hi = std::lower_bound(lo, onsets.end(), measure.end);
    const auto p = offbeatProportion(std::span<const Tick>(lo, hi), measure, {measure.beat_length, options.tolerance});
    if (p) {
      out.push_back(*p);
    } else if (options.empty_measure == EmptyMeasurePolicy::kZero) {
      out.push_back(0.0);
    }
  }
  return out;
}

std::optional<double> syncopationOfMeasures(std::span<const Tick> onsets, const MeasureGrid& grid,
                                            std::size_t first_measure, std::size_t last_measure,
                                            const SyncopationOptions& options) {
  const auto props = measureProportions(onsets, grid, first_measure, last_measure, options);
  if (props.empty()) return std::nullopt;
  return syncopation(offbeatHistogram(props, options.bins));
}

}  // namespace rhythmform
