// Static (whole piece) and dynamic (sliding measure window) evaluation.

#pragma once

#include <cstdint>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "rhythmform/community.h"
#include "rhythmform/graph_metrics.h"
#include "rhythmform/score.h"
#include "rhythmform/syncopation.h"
#include "rhythmform/visibility.h"

namespace rhythmform {

enum class IncludeFinal { kAuto, kOn, kOff };

const char* includeFinalName(IncludeFinal mode);
IncludeFinal parseIncludeFinal(const std::string& name);

/// Every knob of an analysis. Two results are comparable only when their
/// configs compare equal.
struct AnalysisConfig {
  int embedding_dim = 3;
  int stride = 1;
  int bins = kDefaultBins;
  BeatRule beat_rule = BeatRule::kDenominator;
  Tick beat_ticks = 0;
  Tick tolerance = 0;
  EmptyMeasurePolicy empty_measure = EmptyMeasurePolicy::kSkip;
  int window = 2;
  int slide = 1;
  std::uint64_t seed = kDefaultSeed;
  TimeAxis time_axis = TimeAxis::kIndex;
  std::set<int> voices;  // empty = all
  IncludeFinal include_final = IncludeFinal::kAuto;
  Tick min_duration = 0;
  Tick pickup = 0;

  /// `auto` leaves the final event out of the entropy and keeps it for the graph.
  bool heterogeneityIncludesFinal() const { return include_final == IncludeFinal::kOn; }
  bool visibilityIncludesFinal() const { return include_final != IncludeFinal::kOff; }

  GridOptions gridOptions() const { return {beat_rule, beat_ticks, pickup}; }
  MergeOptions mergeOptions() const { return {voices, min_duration, pickup}; }
  SyncopationOptions syncopationOptions() const { return {bins, tolerance, empty_measure}; }

  bool operator==(const AnalysisConfig&) const = default;
};

struct GraphSummary {
  std::size_t nodes = 0;
  std::size_t edges = 0;
  std::optional<double> assortativity;
  double transitivity = 0.0;
  std::optional<PowerLawFit> powerlaw;
  std::map<int, double> degree_correlation;
  int communities = 0;
  double modularity = 0.0;
};

/// Visibility graph of a piece's duration series plus its partition.
struct GraphAnalysis {
  IOISeries durations;
  VisibilityGraph visibility;
  Partition partition;
  GraphSummary summary;
};

GraphSummary summarizeGraph(const Graph& g, const Partition& partition);

GraphAnalysis analyzeGraph(const Score& score, const AnalysisConfig& config);

struct StaticReport {
  std::string title;
  std::string input_hash;
  AnalysisConfig config;
  std::optional<double> heterogeneity;
  std::optional<double> syncopation;
  std::size_t onset_count = 0;
  std::size_t measure_count = 0;
  GraphAnalysis graph;
};

/// Throws Error(kEmptyPiece) for a score without notes.
StaticReport staticMetrics(const Score& score, const AnalysisConfig& config);

struct WindowSpec {
  int window = 2;  // W, measures
  int slide = 1;   // dW, measures
};

struct WindowEntry {
  int start_measure = 0;
  int end_measure = 0;  // exclusive
  Tick start_tick = 0;
  Tick end_tick = 0;  // exclusive
  std::size_t onset_count = 0;
  std::optional<double> heterogeneity;
  std::optional<double> syncopation;
};

struct SeriesMean {
  std::optional<double> value;
  std::size_t covered = 0;
  std::size_t total = 0;
};

struct ComplexitySeries {
  WindowSpec spec;
  std::vector<WindowEntry> entries;

  SeriesMean meanHeterogeneity() const;
  SeriesMean meanSyncopation() const;
};

/// Windows cover measures [i*dW, i*dW + W); trailing partial windows are
/// dropped. Throws Error(kInsufficientLength) when the score is shorter than W.
ComplexitySeries dynamicMetrics(const Score& score, const WindowSpec& spec, const AnalysisConfig& config);

struct ComparisonRow {
  std::string title;
  std::string input_hash;
  std::optional<double> heterogeneity;
  std::optional<double> syncopation;
  std::optional<double> assortativity;
  double transitivity = 0.0;
};

/// Rows sorted by heterogeneity ascending (undefined last). Throws
/// Error(kComparability) unless every report shares one config.
std::vector<ComparisonRow> compareStatic(const std::vector<StaticReport>& reports);

}  // namespace rhythmform
