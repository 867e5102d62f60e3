// Serialization of analysis results: JSON reports, CSV tables, edge lists,
// DOT graphs and static SVG charts.
//
// Every artifact carries the configuration echo and the input hash. Numbers
// are printed with a fixed format so identical runs give identical bytes.

#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "rhythmform/dynamics.h"

namespace rhythmform {

inline constexpr const char* kToolVersion = "rhythmform 1.0.0";

nlohmann::json configToJson(const AnalysisConfig& config);

/// Shortest fixed rendering used in CSV/DOT/SVG ("%.10g").
std::string formatNumber(double value);

nlohmann::json staticReportToJson(const StaticReport& report);
std::string staticReportJson(const StaticReport& report);

/// `window_start_measure,window_end_measure,heterogeneity,syncopation`, empty
/// fields for undefined values, preceded by `#` provenance lines.
std::string complexitySeriesCsv(const ComplexitySeries& series, const AnalysisConfig& config,
                                const std::string& input_hash);
std::string complexitySeriesJson(const ComplexitySeries& series, const AnalysisConfig& config,
                                 const std::string& input_hash);

/// One `i j` pair per line.
std::string edgeListText(const GraphAnalysis& graph, const AnalysisConfig& config, const std::string& input_hash);
/// DOT with `community` and `duration` node attributes.
std::string dotText(const GraphAnalysis& graph, const AnalysisConfig& config, const std::string& input_hash);
/// `node,onset_tick,duration,community`.
std::string partitionCsv(const GraphAnalysis& graph, const AnalysisConfig& config, const std::string& input_hash);

std::string comparisonCsv(const std::vector<ComparisonRow>& rows, const AnalysisConfig& config);

/// Section marker drawn as a vertical line at a measure.
struct PlotMarker {
  int measure = 0;
  std::string label;
};

std::vector<PlotMarker> markersFromAnnotations(const std::vector<Annotation>& annotations);

/// Heterogeneity (black) and syncopation (grey) against window start.
std::string complexitySeriesSvg(const ComplexitySeries& series, const std::vector<PlotMarker>& markers,
                                const AnalysisConfig& config, const std::string& input_hash);

/// Duration bars coloured by community, with section markers placed at the
/// first event of each marked measure.
std::string durationBarsSvg(const GraphAnalysis& graph, const MeasureGrid& grid,
                            const std::vector<PlotMarker>& markers, const AnalysisConfig& config,
                            const std::string& input_hash);

}  // namespace rhythmform
