#include "rhythmform/dynamics.h"

#include <algorithm>

#include "rhythmform/error.h"
#include "rhythmform/heterogeneity.h"

namespace rhythmform {

const char* includeFinalName(IncludeFinal mode) {
  switch (mode) {
    case IncludeFinal::kOn: return "on";
    case IncludeFinal::kOff: return "off";
    case IncludeFinal::kAuto: break;
  }
  return "auto";
}

IncludeFinal parseIncludeFinal(const std::string& name) {
  if (name == "auto") return IncludeFinal::kAuto;
  if (name == "on") return IncludeFinal::kOn;
  if (name == "off") return IncludeFinal::kOff;
  throw Error(ErrorKind::kArgument, "unknown include-final mode '" + name + "'");
}

GraphSummary summarizeGraph(const Graph& g, const Partition& partition) {
  GraphSummary s;
  s.nodes = g.nodeCount();
  s.edges = g.edgeCount();
  s.assortativity = assortativity(g);
  s.transitivity = transitivity(g);
  s.degree_correlation = degreeCorrelation(g);
  s.powerlaw = powerlawFit(s.degree_correlation);
  s.communities = partition.communityCount();
  s.modularity = partition.modularity;
  return s;
}

GraphAnalysis analyzeGraph(const Score& score, const AnalysisConfig& config) {
  GraphAnalysis out;
  const OnsetSeries onsets = mergeVoices(score, config.mergeOptions());
  if (onsets.onsets.empty()) throw Error(ErrorKind::kEmptyPiece, "score has no notes");
  const bool include_final = config.visibilityIncludesFinal();
  if (onsets.onsets.size() < (include_final ? 2u : 3u)) {
    throw Error(ErrorKind::kEmptySeries, "visibility graph needs at least 2 durations");
  }
  out.durations = extractIoi(onsets, include_final, score.ticks_per_quarter);
  out.visibility = buildVisibility(durationSeries(out.durations, config.time_axis));
  out.partition = detectCommunities(out.visibility.graph, config.seed);
  out.summary = summarizeGraph(out.visibility.graph, out.partition);
  return out;
}

StaticReport staticMetrics(const Score& score, const AnalysisConfig& config) {
  StaticReport report;
  report.title = score.title;
  report.input_hash = score.content_hash;
  report.config = config;

  const OnsetSeries onsets = mergeVoices(score, config.mergeOptions());
  if (onsets.onsets.empty()) throw Error(ErrorKind::kEmptyPiece, "score has no notes");
  report.onset_count = onsets.onsets.size();

  const bool final_h = config.heterogeneityIncludesFinal();
  if (onsets.onsets.size() >= (final_h ? 1u : 2u)) {
    const IOISeries ioi = extractIoi(onsets, final_h, score.ticks_per_quarter);
    report.heterogeneity = heterogeneity(ioi.values, config.embedding_dim, config.stride);
  }

  const MeasureGrid grid = measureGrid(score, config.gridOptions());
  report.measure_count = grid.size();
  report.syncopation = syncopationOfMeasures(onsets.onsets, grid, 0, grid.size(), config.syncopationOptions());

  if (onsets.onsets.size() >= (config.visibilityIncludesFinal() ? 2u : 3u)) {
    report.graph = analyzeGraph(score, config);
  }
  return report;
}

namespace {

SeriesMean meanOf(const std::vector<WindowEntry>& entries, std::optional<double> WindowEntry::*field) {
  SeriesMean m;
  m.total = entries.size();
  double sum = 0.0;
  for (const auto& e : entries) {
    if (const auto& v = e.*field) {
      sum += *v;
      ++m.covered;
    }
  }
  if (m.covered > 0) m.value = sum / static_cast<double>(m.covered);
  return m;
}

}  // namespace

SeriesMean ComplexitySeries::meanHeterogeneity() const { return meanOf(entries, &WindowEntry::heterogeneity); }

SeriesMean ComplexitySeries::meanSyncopation() const { return meanOf(entries, &WindowEntry::syncopation); }

ComplexitySeries dynamicMetrics(const Score& score, const WindowSpec& spec, const AnalysisConfig& config) {
  if (spec.window < 1 || spec.slide < 1 || spec.slide > spec.window) {
    throw Error(ErrorKind::kArgument, "window spec needs W >= 1 and 1 <= dW <= W");
  }
  const OnsetSeries onsets = mergeVoices(score, config.mergeOptions());
  if (onsets.onsets.empty()) throw Error(ErrorKind::kEmptyPiece, "score has no notes");
  const MeasureGrid grid = measureGrid(score, config.gridOptions());
  const std::size_t full = grid.fullMeasureCount();
  const auto W = static_cast<std::size_t>(spec.window);
  if (full < W) {
    throw Error(ErrorKind::kInsufficientLength, "score spans " + std::to_string(full) +
                                                    " full measures, shorter than a window of " +
                                                    std::to_string(W));
  }

  const auto& all = onsets.onsets;
  const bool final_h = config.heterogeneityIncludesFinal();
  ComplexitySeries series;
  series.spec = spec;
  for (std::size_t start = 0; start + W <= full; start += static_cast<std::size_t>(spec.slide)) {
    WindowEntry e;
    e.start_measure = static_cast<int>(start);
    e.end_measure = static_cast<int>(start + W);
    e.start_tick = grid.measures[start].start;
    e.end_tick = grid.measures[start + W - 1].end;
    auto lo = std::lower_bound(all.begin(), all.end(), e.start_tick);
    auto hi = std::lower_bound(lo, all.end(), e.end_tick);
    e.onset_count = static_cast<std::size_t>(hi - lo);

    std::vector<Tick> ioi;
    for (auto it = lo; it != hi && std::next(it) != hi; ++it) ioi.push_back(*std::next(it) - *it);
    if (final_h && lo != hi) {
      ioi.push_back(hi != all.end() ? *hi - *std::prev(hi) : onsets.final_event_length);
    }
    e.heterogeneity = heterogeneity(ioi, config.embedding_dim, config.stride);
    e.syncopation = syncopationOfMeasures(std::span<const Tick>(lo, hi), grid, start, start + W,
                                          config.syncopationOptions());
    series.entries.push_back(e);
  }
  return series;
}

std::vector<ComparisonRow> compareStatic(const std::vector<StaticReport>& reports) {
  for (std::size_t i = 1; i < reports.size(); ++i) {
    if (!(reports[i].config == reports.front().config)) {
      throw Error(ErrorKind::kComparability, "reports were produced with different configurations ('" +
                                                 reports.front().title + "' vs '" + reports[i].title + "')");
    }
  }
  std::vector<ComparisonRow> rows;
  for (const auto& r : reports) {
    rows.push_back({r.title, r.input_hash, r.heterogeneity, r.syncopation, r.graph.summary.assortativity,
                    r.graph.summary.transitivity});
  }
  std::stable_sort(rows.begin(), rows.end(), [](const ComparisonRow& a, const ComparisonRow& b) {
    if (a.heterogeneity.has_value() != b.heterogeneity.has_value()) return a.heterogeneity.has_value();
    if (a.heterogeneity && *a.heterogeneity != *b.heterogeneity) return *a.heterogeneity < *b.heterogeneity;
    return a.title < b.title;
  });
  return rows;
}

}  // namespace rhythmform
