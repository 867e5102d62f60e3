#include "rhythmform/report.h"

#include <algorithm>
#include <cstdio>
#include <sstream>

namespace rhythmform {

using nlohmann::json;

namespace {

json optionalNumber(const std::optional<double>& v) { return v ? json(*v) : json(nullptr); }

std::string optionalField(const std::optional<double>& v) { return v ? formatNumber(*v) : std::string(); }

std::string provenance(const char* comment, const AnalysisConfig& config, const std::string& input_hash) {
  std::ostringstream out;
  out << comment << " generator: " << kToolVersion << "\n";
  out << comment << " input_hash: " << input_hash << "\n";
  out << comment << " config: " << configToJson(config).dump() << "\n";
  return out.str();
}

std::string xmlEscape(const std::string& s) {
  std::string out;
  for (char c : s) {
    switch (c) {
      case '&': out += "&amp;"; break;
      case '<': out += "&lt;"; break;
      case '>': out += "&gt;"; break;
      case '"': out += "&quot;"; break;
      default: out += c;
    }
  }
  return out;
}

constexpr const char* kPalette[] = {"#7b3294", "#1b9e77", "#2c7bb6", "#e6ab02", "#d7191c",
                                    "#66a61e", "#e7298a", "#a6761d", "#666666", "#17becf"};

std::string svgOpen(int width, int height, const AnalysisConfig& config, const std::string& input_hash) {
  std::ostringstream out;
  out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << width << "\" height=\"" << height
      << "\" viewBox=\"0 0 " << width << " " << height << "\">\n";
  out << "<desc>" << xmlEscape(provenance("", config, input_hash)) << "</desc>\n";
  out << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
  return out.str();
}

}  // namespace

std::string formatNumber(double value) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.10g", value);
  return buf;
}

json configToJson(const AnalysisConfig& c) {
  json j;
  j["embedding_dim"] = c.embedding_dim;
  j["stride"] = c.stride;
  j["bins"] = c.bins;
  j["beat_rule"] = beatRuleName(c.beat_rule);
  j["beat_ticks"] = c.beat_ticks;
  j["tolerance"] = c.tolerance;
  j["empty_measure"] = emptyMeasurePolicyName(c.empty_measure);
  j["window"] = c.window;
  j["slide"] = c.slide;
  j["seed"] = c.seed;
  j["time_axis"] = timeAxisName(c.time_axis);
  j["voices"] = c.voices.empty() ? json("all") : json(c.voices);
  j["include_final"] = includeFinalName(c.include_final);
  j["min_duration"] = c.min_duration;
  j["pickup"] = c.pickup;
  return j;
}

json staticReportToJson(const StaticReport& r) {
  const GraphSummary& g = r.graph.summary;
  json graph;
  graph["nodes"] = g.nodes;
  graph["edges"] = g.edges;
  graph["assortativity"] = optionalNumber(g.assortativity);
  graph["transitivity"] = g.transitivity;
  graph["powerlaw_slope"] = g.powerlaw ? json(g.powerlaw->b) : json(nullptr);
  graph["powerlaw_intercept"] = g.powerlaw ? json(g.powerlaw->a) : json(nullptr);
  graph["communities"] = g.communities;
  graph["modularity"] = g.modularity;
  json corr = json::array();
  for (const auto& [k, km] : g.degree_correlation) corr.push_back({{"degree", k}, {"mean_neighbor_degree", km}});
  graph["degree_correlation"] = corr;

  json j;
  j["generator"] = kToolVersion;
  j["title"] = r.title;
  j["input_hash"] = r.input_hash;
  j["config"] = configToJson(r.config);
  j["heterogeneity"] = optionalNumber(r.heterogeneity);
  j["syncopation"] = optionalNumber(r.syncopation);
  j["onsets"] = r.onset_count;
  j["measures"] = r.measure_count;
  j["graph"] = graph;
  return j;
}

std::string staticReportJson(const StaticReport& report) { return staticReportToJson(report).dump(2) + "\n"; }

std::string complexitySeriesCsv(const ComplexitySeries& series, const AnalysisConfig& config,
                                const std::string& input_hash) {
  std::ostringstream out;
  out << provenance("#", config, input_hash);
  out << "window_start_measure,window_end_measure,heterogeneity,syncopation\n";
  for (const auto& e : series.entries) {
    out << e.start_measure << "," << e.end_measure << "," << optionalField(e.heterogeneity) << ","
        << optionalField(e.syncopation) << "\n";
  }
  return out.str();
}

std::string complexitySeriesJson(const ComplexitySeries& series, const AnalysisConfig& config,
                                 const std::string& input_hash) {
  json j;
  j["generator"] = kToolVersion;
  j["input_hash"] = input_hash;
  j["config"] = configToJson(config);
  json windows = json::array();
  for (const auto& e : series.entries) {
    windows.push_back({{"start_measure", e.start_measure},
                       {"end_measure", e.end_measure},
                       {"start_tick", e.start_tick},
                       {"end_tick", e.end_tick},
                       {"onsets", e.onset_count},
                       {"heterogeneity", optionalNumber(e.heterogeneity)},
                       {"syncopation", optionalNumber(e.syncopation)}});
  }
  j["windows"] = windows;
  auto mean = [](const SeriesMean& m) {
    return json{{"value", optionalNumber(m.value)}, {"covered", m.covered}, {"total", m.total}};
  };
  j["mean_heterogeneity"] = mean(series.meanHeterogeneity());
  j["mean_syncopation"] = mean(series.meanSyncopation());
  return j.dump(2) + "\n";
}

std::string edgeListText(const GraphAnalysis& graph, const AnalysisConfig& config, const std::string& input_hash) {
  std::ostringstream out;
  out << provenance("#", config, input_hash);
  for (auto [u, v] : graph.visibility.graph.edges()) out << u << " " << v << "\n";
  return out.str();
}

std::string dotText(const GraphAnalysis& graph, const AnalysisConfig& config, const std::string& input_hash) {
  std::ostringstream out;
  out << provenance("//", config, input_hash);
  out << "graph visibility {\n";
  const auto& part = graph.partition.community;
  for (std::size_t i = 0; i < graph.visibility.graph.nodeCount(); ++i) {
    out << "  " << i << " [community=" << part[i] << ", duration=" << graph.durations.values[i]
        << ", onset_tick=" << graph.durations.starts[i] << "];\n";
  }
  for (auto [u, v] : graph.visibility.graph.edges()) out << "  " << u << " -- " << v << ";\n";
  out << "}\n";
  return out.str();
}

std::string partitionCsv(const GraphAnalysis& graph, const AnalysisConfig& config, const std::string& input_hash) {
  std::ostringstream out;
  out << provenance("#", config, input_hash);
  out << "node,onset_tick,duration,community\n";
  for (std::size_t i = 0; i < graph.durations.size(); ++i) {
    out << i << "," << graph.durations.starts[i] << "," << graph.durations.values[i] << ","
        << graph.partition.community[i] << "\n";
  }
  return out.str();
}

std::string comparisonCsv(const std::vector<ComparisonRow>& rows, const AnalysisConfig& config) {
  std::ostringstream out;
  out << "# generator: " << kToolVersion << "\n";
  out << "# config: " << configToJson(config).dump() << "\n";
  out << "title,input_hash,heterogeneity,syncopation,assortativity,transitivity\n";
  for (const auto& r : rows) {
    std::string title = r.title;
    std::replace(title.begin(), title.end(), ',', ';');
    out << title << "," << r.input_hash << "," << optionalField(r.heterogeneity) << ","
        << optionalField(r.syncopation) << "," << optionalField(r.assortativity) << ","
        << formatNumber(r.transitivity) << "\n";
  }
  return out.str();
}

std::vector<PlotMarker> markersFromAnnotations(const std::vector<Annotation>& annotations) {
  std::vector<PlotMarker> out;
  for (const auto& a : annotations) out.push_back({a.measure, a.label});
  return out;
}

std::string complexitySeriesSvg(const ComplexitySeries& series, const std::vector<PlotMarker>& markers,
                                const AnalysisConfig& config, const std::string& input_hash) {
  constexpr int kWidth = 800, kHeight = 300, kPad = 40;
  std::ostringstream out;
  out << svgOpen(kWidth, kHeight, config, input_hash);
  const int last = series.entries.empty() ? 1 : std::max(1, series.entries.back().start_measure);
  auto px = [&](double measure) { return kPad + (kWidth - 2 * kPad) * measure / last; };
  auto py = [&](double v) { return kHeight - kPad - (kHeight - 2 * kPad) * v; };

  out << "<line x1=\"" << kPad << "\" y1=\"" << py(0) << "\" x2=\"" << kWidth - kPad << "\" y2=\"" << py(0)
      << "\" stroke=\"black\"/>\n";
  out << "<line x1=\"" << kPad << "\" y1=\"" << py(0) << "\" x2=\"" << kPad << "\" y2=\"" << py(1)
      << "\" stroke=\"black\"/>\n";
  for (const auto& m : markers) {
    if (m.measure > last) continue;
    const std::string x = formatNumber(px(m.measure));
    out << "<line class=\"marker\" x1=\"" << x << "\" y1=\"" << py(0) << "\" x2=\"" << x << "\" y2=\"" << py(1)
        << "\" stroke=\"#2c7bb6\"/>\n";
    out << "<text x=\"" << x << "\" y=\"" << py(1) - 4 << "\" font-size=\"10\">" << xmlEscape(m.label)
        << "</text>\n";
  }
  auto polyline = [&](std::optional<double> WindowEntry::*field, const char* colour, const char* name) {
    out << "<polyline class=\"" << name << "\" fill=\"none\" stroke=\"" << colour << "\" points=\"";
    bool first = true;
    for (const auto& e : series.entries) {
      if (!(e.*field)) continue;
      out << (first ? "" : " ") << formatNumber(px(e.start_measure)) << "," << formatNumber(py(*(e.*field)));
      first = false;
    }
    out << "\"/>\n";
  };
  polyline(&WindowEntry::heterogeneity, "black", "heterogeneity");
  polyline(&WindowEntry::syncopation, "gray", "syncopation");
  out << "</svg>\n";
  return out.str();
}

std::string durationBarsSvg(const GraphAnalysis& graph, const MeasureGrid& grid,
                            const std::vector<PlotMarker>& markers, const AnalysisConfig& config,
                            const std::string& input_hash) {
  constexpr int kWidth = 900, kHeight = 300, kPad = 30;
  const std::size_t n = graph.durations.size();
  std::ostringstream out;
  out << svgOpen(kWidth, kHeight, config, input_hash);
  if (n == 0) {
    out << "</svg>\n";
    return out.str();
  }
  const double max_value =
      static_cast<double>(*std::max_element(graph.durations.values.begin(), graph.durations.values.end()));
  const double slot = static_cast<double>(kWidth - 2 * kPad) / static_cast<double>(n);
  for (std::size_t i = 0; i < n; ++i) {
    const double h = (kHeight - 2 * kPad) * static_cast<double>(graph.durations.values[i]) / max_value;
    const int c = graph.partition.community.empty() ? 0 : graph.partition.community[i];
    out << "<rect x=\"" << formatNumber(kPad + slot * i) << "\" y=\"" << formatNumber(kHeight - kPad - h)
        << "\" width=\"" << formatNumber(slot * 0.8) << "\" height=\"" << formatNumber(h) << "\" fill=\""
        << kPalette[c % std::size(kPalette)] << "\" data-community=\"" << c << "\"/>\n";
  }
  for (const auto& m : markers) {
    if (m.measure < 0 || static_cast<std::size_t>(m.measure) >= grid.size()) continue;
    const Tick tick = grid.measures[m.measure].start;
    const auto& starts = graph.durations.starts;
    const auto idx = static_cast<std::size_t>(std::lower_bound(starts.begin(), starts.end(), tick) - starts.begin());
    const std::string x = formatNumber(kPad + slot * idx - slot * 0.1);
    out << "<line class=\"marker\" x1=\"" << x << "\" y1=\"" << kPad << "\" x2=\"" << x << "\" y2=\""
        << kHeight - kPad << "\" stroke=\"black\" stroke-dasharray=\"4,2\"/>\n";
    out << "<text x=\"" << x << "\" y=\"" << kPad - 6 << "\" font-size=\"10\">" << xmlEscape(m.label) << "</text>\n";
  }
  out << "</svg>\n";
  return out.str();
}

}  // namespace rhythmform
