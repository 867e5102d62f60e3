#include <doctest.h>

#include <random>

#include "rhythmform/dynamics.h"
#include "rhythmform/error.h"
#include "rhythmform/report.h"
#include "support/fixtures.h"

using namespace rhythmform;
using namespace rhythmform::testing;

namespace {

/// A score made of `block` (onsets relative to the block start) repeated
/// `times` times, in 4/4.
Score repeatedBlock(const std::vector<Tick>& block, Tick block_length, int times) {
  Score s;
  s.time_signatures = {{4, 4, 0}};
  Voice v;
  for (int r = 0; r < times; ++r)
    for (std::size_t i = 0; i < block.size(); ++i) {
      const Tick next = i + 1 < block.size() ? block[i + 1] : block_length;
      v.notes.push_back({r * block_length + block[i], next - block[i], 0});
    }
  s.voices = {v};
  s.end_tick = times * block_length;
  return s;
}

}  // namespace

TEST_CASE("constant quarter-note etude") {
  const Score s = loadFixture("regular_quarters.json");
  const StaticReport r = staticMetrics(s, {});
  CHECK(*r.heterogeneity == 0.0);
  CHECK(*r.syncopation == 0.0);
  CHECK(r.graph.summary.transitivity == 0.0);
  CHECK(r.onset_count == 64);
}

TEST_CASE("empty score is an empty-piece error") {
  Score s;
  s.time_signatures = {{4, 4, 0}};
  s.voices = {Voice{}};
  s.end_tick = 1920;
  try {
    staticMetrics(s, {});
    FAIL("expected error");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::kEmptyPiece);
  }
}

TEST_CASE("window entries cover measure ranges and drop trailing partial windows") {
  const Score s = loadFixture("mozart_k331_theme.json");
  const ComplexitySeries series = dynamicMetrics(s, {2, 1}, {});
  CHECK(series.entries.size() == 35);
  CHECK(dynamicMetrics(s, {4, 4}, {}).entries.size() == 9);
  CHECK(dynamicMetrics(s, {5, 2}, {}).entries.size() == 16);
  for (std::size_t i = 0; i < series.entries.size(); ++i) {
    CHECK(series.entries[i].start_measure == static_cast<int>(i));
    CHECK(series.entries[i].end_measure == static_cast<int>(i) + 2);
  }
}

TEST_CASE("window onset sets equal a direct filter by measure bounds") {
  std::mt19937_64 rng(17);
  for (int trial = 0; trial < 100; ++trial) {
    const Score s = randomScore(rng);
    AnalysisConfig config;
    const OnsetSeries onsets = mergeVoices(s);
    const MeasureGrid grid = measureGrid(s);
    if (onsets.onsets.empty() || grid.fullMeasureCount() < 2) continue;
    const ComplexitySeries series = dynamicMetrics(s, {2, 1}, config);
    for (const auto& e : series.entries) {
      std::size_t count = 0;
      for (Tick t : onsets.onsets)
        if (t >= grid.boundaries[e.start_measure] && t < grid.measures[e.end_measure - 1].end) ++count;
      REQUIRE(e.onset_count == count);
    }
  }
}

TEST_CASE("full-piece window reproduces the static values") {
  for (const char* name : {"mozart_k331_theme.json", "regular_siciliano.json", "mozart_k331_m1-4.json"}) {
    const Score s = loadFixture(name);
    for (BeatRule rule : {BeatRule::kDenominator, BeatRule::kCompound}) {
      AnalysisConfig config;
      config.beat_rule = rule;
      const StaticReport r = staticMetrics(s, config);
      const int full = static_cast<int>(measureGrid(s, config.gridOptions()).fullMeasureCount());
      const ComplexitySeries series = dynamicMetrics(s, {full, 1}, config);
      REQUIRE(series.entries.size() == 1);
      CHECK(*series.entries[0].heterogeneity == doctest::Approx(*r.heterogeneity));
      CHECK(*series.entries[0].syncopation == doctest::Approx(*r.syncopation));
    }
  }
}

TEST_CASE("a repeated block gives a constant series across aligned windows") {
  const Score s = repeatedBlock({0, 480, 720, 960, 1680, 1920, 2160, 2880, 3360}, 3840, 6);
  const ComplexitySeries series = dynamicMetrics(s, {2, 2}, {});
  REQUIRE(series.entries.size() == 6);
  for (const auto& e : series.entries) {
    CHECK(e.heterogeneity == series.entries[0].heterogeneity);
    CHECK(e.syncopation == series.entries[0].syncopation);
  }
  CHECK(series.entries[0].heterogeneity.value() > 0.0);
}

TEST_CASE("insufficient data and length") {
  const Score s = repeatedBlock({0}, 1920, 3);
  const ComplexitySeries series = dynamicMetrics(s, {2, 1}, {});
  REQUIRE(series.entries.size() == 2);
  CHECK_FALSE(series.entries[0].heterogeneity.has_value());
  CHECK(*series.entries[0].syncopation == 0.0);
  const SeriesMean mean = series.meanHeterogeneity();
  CHECK_FALSE(mean.value.has_value());
  CHECK(mean.covered == 0);
  CHECK(mean.total == 2);
  CHECK(series.meanSyncopation().covered == 2);

  try {
    dynamicMetrics(s, {4, 1}, {});
    FAIL("expected error");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::kInsufficientLength);
  }
  CHECK_THROWS_AS(dynamicMetrics(s, {2, 3}, {}), Error);
}

TEST_CASE("include-final controls the trailing interval") {
  const Score s = loadFixture("mozart_k331_m3-4.json");
  AnalysisConfig off, on;
  on.include_final = IncludeFinal::kOn;
  off.include_final = IncludeFinal::kOff;
  CHECK(staticMetrics(s, off).graph.summary.nodes == 8);
  CHECK(staticMetrics(s, {}).graph.summary.nodes == 9);
  CHECK(*staticMetrics(s, on).heterogeneity != *staticMetrics(s, off).heterogeneity);
  CHECK(*staticMetrics(s, {}).heterogeneity == *staticMetrics(s, off).heterogeneity);
}

TEST_CASE("compare orders by heterogeneity and refuses mixed configs") {
  const StaticReport mozart = staticMetrics(loadFixture("mozart_k331_theme.json"), {});
  const StaticReport regular = staticMetrics(loadFixture("regular_siciliano.json"), {});
  const auto rows = compareStatic({mozart, regular});
  REQUIRE(rows.size() == 2);
  CHECK(rows[0].input_hash == regular.input_hash);
  CHECK(rows[0].heterogeneity < rows[1].heterogeneity);

  AnalysisConfig d4;
  d4.embedding_dim = 4;
  const StaticReport other = staticMetrics(loadFixture("regular_siciliano.json"), d4);
  try {
    compareStatic({mozart, other});
    FAIL("expected error");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::kComparability);
  }
}

TEST_CASE("reports are byte-identical across runs") {
  const Score a = loadFixture("mozart_k331_theme.json");
  const Score b = loadFixture("mozart_k331_theme.json");
  CHECK(staticReportJson(staticMetrics(a, {})) == staticReportJson(staticMetrics(b, {})));
  const AnalysisConfig config;
  const auto sa = dynamicMetrics(a, {2, 1}, config);
  const auto sb = dynamicMetrics(b, {2, 1}, config);
  CHECK(complexitySeriesCsv(sa, config, a.content_hash) == complexitySeriesCsv(sb, config, b.content_hash));
}

TEST_CASE("property: bounds on random scores") {
  std::mt19937_64 rng(4242);
  for (int trial = 0; trial < 200; ++trial) {
    const Score s = randomScore(rng);
    if (s.noteCount() == 0) continue;
    AnalysisConfig config;
    config.beat_rule = trial % 2 ? BeatRule::kCompound : BeatRule::kDenominator;
    const StaticReport r = staticMetrics(s, config);
    if (r.heterogeneity) REQUIRE((*r.heterogeneity >= 0.0 && *r.heterogeneity <= 1.0));
    if (r.syncopation) REQUIRE((*r.syncopation >= 0.0 && *r.syncopation <= 1.0));
  }
}
