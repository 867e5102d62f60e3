#include "rhythmform/cli.h"

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "rhythmform/dynamics.h"
#include "rhythmform/error.h"
#include "rhythmform/midi_parser.h"
#include "rhythmform/report.h"
#include "rhythmform/rhythm_json.h"

namespace rhythmform {

namespace fs = std::filesystem;

namespace {

struct RawFlags {
  int embedding_dim = 3;
  int stride = 1;
  int bins = kDefaultBins;
  std::string beat_rule = "denominator";
  Tick beat_ticks = 0;
  Tick tolerance = 0;
  std::string empty_measure = "skip";
  int window = 2;
  int slide = 1;
  std::uint64_t seed = kDefaultSeed;
  std::string time_axis = "index";
  std::string voices = "all";
  std::string include_final = "auto";
  Tick min_duration = 0;
  Tick pickup = 0;
  std::string out_dir = ".";
  std::vector<std::string> formats;
  std::vector<std::string> inputs;
};

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class UnreadableError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

std::set<int> parseVoiceList(const std::string& text) {
  std::set<int> out;
  if (text == "all" || text.empty()) return out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      std::size_t used = 0;
      const int id = std::stoi(item, &used);
      if (used != item.size() || id < 0) throw std::invalid_argument(item);
      out.insert(id);
    } catch (const std::exception&) {
      throw UsageError("--voices expects 'all' or a comma-separated list of voice ids, got '" + text + "'");
    }
  }
  return out;
}

AnalysisConfig toConfig(const RawFlags& f) {
  AnalysisConfig c;
  c.embedding_dim = f.embedding_dim;
  c.stride = f.stride;
  c.bins = f.bins;
  c.beat_rule = parseBeatRule(f.beat_rule);
  c.beat_ticks = f.beat_ticks;
  c.tolerance = f.tolerance;
  c.empty_measure = parseEmptyMeasurePolicy(f.empty_measure);
  c.window = f.window;
  c.slide = f.slide;
  c.seed = f.seed;
  c.time_axis = parseTimeAxis(f.time_axis);
  c.voices = parseVoiceList(f.voices);
  c.include_final = parseIncludeFinal(f.include_final);
  c.min_duration = f.min_duration;
  c.pickup = f.pickup;
  return c;
}

std::string readFile(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw UnreadableError("cannot read input '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  if (in.bad()) throw UnreadableError("cannot read input '" + path + "'");
  return ss.str();
}

Score loadScore(const std::string& path) {
  const std::string bytes = readFile(path);
  Score score = bytes.rfind("MThd", 0) == 0 ? parseMidi(std::string_view(bytes)) : parseRhythmJson(bytes);
  if (score.title.empty()) score.title = fs::path(path).stem().string();
  return score;
}

void writeFile(const fs::path& path, const std::string& content, std::ostream& out) {
  std::ofstream f(path, std::ios::binary | std::ios::trunc);
  if (!f) throw Error(ErrorKind::kIo, "cannot write '" + path.string() + "'");
  f << content;
  f.close();
  if (!f) throw Error(ErrorKind::kIo, "cannot write '" + path.string() + "'");
  out << path.string() << "\n";
}

bool wants(const std::vector<std::string>& formats, const char* f) {
  return std::find(formats.begin(), formats.end(), f) != formats.end();
}

void checkFormats(const std::vector<std::string>& formats, std::initializer_list<const char*> allowed,
                  const std::string& mode) {
  for (const auto& f : formats) {
    if (std::none_of(allowed.begin(), allowed.end(), [&](const char* a) { return f == a; })) {
      throw UsageError("format '" + f + "' is not available for '" + mode + "'");
    }
  }
}

int exitCodeFor(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::kArgument: return kExitUsage;
    case ErrorKind::kParse:
    case ErrorKind::kUnsupportedFormat:
    case ErrorKind::kValidation: return kExitParse;
    case ErrorKind::kComparability: return kExitComparability;
    case ErrorKind::kEmptySeries:
    case ErrorKind::kEmptyPiece:
    case ErrorKind::kInsufficientLength: return kExitAnalysis;
    case ErrorKind::kIo: return kExitOutput;
  }
  return kExitInternal;
}

void runStatic(const RawFlags& f, const AnalysisConfig& config, std::ostream& out) {
  auto formats = f.formats.empty() ? std::vector<std::string>{"json"} : f.formats;
  checkFormats(formats, {"json", "svg"}, "static");
  for (const auto& input : f.inputs) {
    const Score score = loadScore(input);
    const StaticReport report = staticMetrics(score, config);
    const std::string stem = fs::path(input).stem().string();
    if (wants(formats, "json")) writeFile(fs::path(f.out_dir) / (stem + ".static.json"), staticReportJson(report), out);
    if (wants(formats, "svg")) {
      const MeasureGrid grid = measureGrid(score, config.gridOptions());
      writeFile(fs::path(f.out_dir) / (stem + ".graph.svg"),
                durationBarsSvg(report.graph, grid, markersFromAnnotations(score.annotations), config,
                                report.input_hash),
                out);
    }
  }
}

void runDynamic(const RawFlags& f, const AnalysisConfig& config, std::ostream& out) {
  auto formats = f.formats.empty() ? std::vector<std::string>{"csv", "json"} : f.formats;
  checkFormats(formats, {"csv", "json", "svg"}, "dynamic");
  for (const auto& input : f.inputs) {
    const Score score = loadScore(input);
    const ComplexitySeries series = dynamicMetrics(score, {config.window, config.slide}, config);
    const std::string stem = fs::path(input).stem().string();
    const fs::path dir(f.out_dir);
    if (wants(formats, "csv")) {
      writeFile(dir / (stem + ".dynamic.csv"), complexitySeriesCsv(series, config, score.content_hash), out);
    }
    if (wants(formats, "json")) {
      writeFile(dir / (stem + ".dynamic.json"), complexitySeriesJson(series, config, score.content_hash), out);
    }
    if (wants(formats, "svg")) {
      writeFile(dir / (stem + ".dynamic.svg"),
                complexitySeriesSvg(series, markersFromAnnotations(score.annotations), config, score.content_hash),
                out);
    }
  }
}

void runGraph(const RawFlags& f, const AnalysisConfig& config, std::ostream& out) {
  auto formats = f.formats.empty() ? std::vector<std::string>{"dot", "csv"} : f.formats;
  checkFormats(formats, {"dot", "csv", "svg", "json"}, "graph");
  for (const auto& input : f.inputs) {
    const Score score = loadScore(input);
    const GraphAnalysis graph = analyzeGraph(score, config);
    const std::string stem = fs::path(input).stem().string();
    const fs::path dir(f.out_dir);
    const std::string& hash = score.content_hash;
    writeFile(dir / (stem + ".edges.txt"), edgeListText(graph, config, hash), out);
    if (wants(formats, "dot")) writeFile(dir / (stem + ".graph.dot"), dotText(graph, config, hash), out);
    if (wants(formats, "csv")) writeFile(dir / (stem + ".partition.csv"), partitionCsv(graph, config, hash), out);
    if (wants(formats, "json")) {
      StaticReport report = staticMetrics(score, config);
      writeFile(dir / (stem + ".static.json"), staticReportJson(report), out);
    }
    if (wants(formats, "svg")) {
      const MeasureGrid grid = measureGrid(score, config.gridOptions());
      writeFile(dir / (stem + ".graph.svg"),
                durationBarsSvg(graph, grid, markersFromAnnotations(score.annotations), config, hash), out);
    }
  }
}

void runCompare(const RawFlags& f, const AnalysisConfig& config, std::ostream& out) {
  auto formats = f.formats.empty() ? std::vector<std::string>{"csv"} : f.formats;
  checkFormats(formats, {"csv"}, "compare");
  std::vector<StaticReport> reports;
  for (const auto& input : f.inputs) {
    reports.push_back(staticMetrics(loadScore(input), config));
  }
  writeFile(fs::path(f.out_dir) / "compare.csv", comparisonCsv(compareStatic(reports), config), out);
}

void addSharedFlags(CLI::App* app, RawFlags& f) {
  app->add_option("--embedding-dim", f.embedding_dim, "Ordinal pattern length D")->check(CLI::Range(2, 8));
  app->add_option("--stride", f.stride, "Step between pattern windows")->check(CLI::PositiveNumber);
  app->add_option("--bins", f.bins, "Off-beat histogram bins")->check(CLI::Range(2, 1000));
  app->add_option("--beat-rule", f.beat_rule, "Beat length rule")->check(CLI::IsMember({"denominator", "compound"}));
  app->add_option("--beat-ticks", f.beat_ticks, "Beat length override in ticks")->check(CLI::NonNegativeNumber);
  app->add_option("--tolerance", f.tolerance, "On-beat tolerance in ticks")->check(CLI::NonNegativeNumber);
  app->add_option("--empty-measure", f.empty_measure, "Empty measure policy")->check(CLI::IsMember({"skip", "zero"}));
  app->add_option("--window", f.window, "Window length W in measures")->check(CLI::PositiveNumber);
  app->add_option("--slide", f.slide, "Window step dW in measures")->check(CLI::PositiveNumber);
  app->add_option("--seed", f.seed, "Community detection seed");
  app->add_option("--time-axis", f.time_axis, "Visibility abscissa")->check(CLI::IsMember({"index", "onset"}));
  app->add_option("--voices", f.voices, "Voice ids (comma separated) or 'all'");
  app->add_option("--include-final", f.include_final, "Append the final event length")
      ->check(CLI::IsMember({"auto", "on", "off"}));
  app->add_option("--min-duration", f.min_duration, "Drop events shorter than this many ticks")
      ->check(CLI::NonNegativeNumber);
  app->add_option("--pickup", f.pickup, "Anacrusis length in ticks")->check(CLI::NonNegativeNumber);
  app->add_option("--out", f.out_dir, "Output directory");
  app->add_option("--format", f.formats, "Output formats")
      ->delimiter(',')
      ->check(CLI::IsMember({"json", "csv", "dot", "svg"}));
  app->add_option("inputs", f.inputs, "Score files (.mid or .json)")->required();
}

}  // namespace

int runCli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Rhythmic complexity of symbolic scores: heterogeneity, syncopation and visibility-graph structure"};
  app.require_subcommand(1);
  RawFlags flags;
  if (const char* env = std::getenv("RHYTHMFORM_SEED")) {
    try {
      flags.seed = std::stoull(env);
    } catch (const std::exception&) {
      err << "rhythmform: error: RHYTHMFORM_SEED must be a non-negative integer\n";
      return kExitUsage;
    }
  }
  auto* static_cmd = app.add_subcommand("static", "Whole-piece metrics (JSON report)");
  auto* dynamic_cmd = app.add_subcommand("dynamic", "Sliding-window metrics (CSV + JSON)");
  auto* graph_cmd = app.add_subcommand("graph", "Visibility graph exports (edge list, DOT, partition CSV)");
  auto* compare_cmd = app.add_subcommand("compare", "Comparison table of several pieces");
  for (auto* cmd : {static_cmd, dynamic_cmd, graph_cmd, compare_cmd}) addSharedFlags(cmd, flags);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  if (!reversed.empty()) reversed.pop_back();
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    std::string msg = e.what();
    std::replace(msg.begin(), msg.end(), '\n', ' ');
    err << "rhythmform: error: usage: " << msg << "\n";
    return kExitUsage;
  }

  try {
    const AnalysisConfig config = toConfig(flags);
    std::error_code ec;
    fs::create_directories(flags.out_dir, ec);
    if (ec) throw Error(ErrorKind::kIo, "cannot create output directory '" + flags.out_dir + "'");
    if (*static_cmd) runStatic(flags, config, out);
    if (*dynamic_cmd) runDynamic(flags, config, out);
    if (*graph_cmd) runGraph(flags, config, out);
    if (*compare_cmd) runCompare(flags, config, out);
  } catch (const UsageError& e) {
    err << "rhythmform: error: usage: " << e.what() << "\n";
    return kExitUsage;
  } catch (const UnreadableError& e) {
    err << "rhythmform: error: " << e.what() << "\n";
    return kExitUnreadable;
  } catch (const Error& e) {
    std::string msg = e.what();
    std::replace(msg.begin(), msg.end(), '\n', ' ');
    err << "rhythmform: error: " << errorKindName(e.kind()) << ": " << msg << "\n";
    return exitCodeFor(e.kind());
  } catch (const std::exception& e) {
    err << "rhythmform: error: internal: " << e.what() << "\n";
    return kExitInternal;
  }
  return kExitOk;
}

}  // namespace rhythmform
