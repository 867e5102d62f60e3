// Fixture loading and random score generation shared by the tests.

#pragma once

#include <fstream>
#include <random>
#include <sstream>
#include <string>

#include "rhythmform/rhythm_json.h"
#include "rhythmform/score.h"

namespace rhythmform::testing {

inline std::string fixturePath(const std::string& name) { return std::string(RHYTHMFORM_FIXTURE_DIR) + "/" + name; }

inline std::string readFile(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

inline Score loadFixture(const std::string& name) { return parseRhythmJson(readFile(fixturePath(name))); }

/// A random multi-voice score on a sixteenth grid with random meters, rests
/// and occasional signature changes.
inline Score randomScore(std::mt19937_64& rng) {
  static const TimeSignature kMeters[] = {{4, 4, 0}, {3, 4, 0}, {2, 4, 0}, {6, 8, 0}, {9, 8, 0}, {5, 8, 0}, {3, 8, 0}};
  auto pick = [&](int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); };
  Score s;
  s.ticks_per_quarter = 480;
  const int measures = pick(1, 24);
  s.time_signatures.push_back(kMeters[pick(0, 6)]);
  if (measures > 4 && pick(0, 2) == 0) {
    TimeSignature change = kMeters[pick(0, 6)];
    change.start_measure = pick(1, measures - 1);
    s.time_signatures.push_back(change);
  }
  Tick end = 0;
  for (int m = 0; m < measures; ++m) {
    const TimeSignature* sig = &s.time_signatures.front();
    for (const auto& t : s.time_signatures)
      if (t.start_measure <= m) sig = &t;
    end += measureLengthFor(*sig, s.ticks_per_quarter);
  }
  s.end_tick = end;
  const int voices = pick(1, 3);
  for (int v = 0; v < voices; ++v) {
    Voice voice;
    voice.id = v;
    Tick t = 120 * pick(0, 3);
    while (t < end) {
      const Tick d = std::min<Tick>(120 * pick(1, 8), end - t);
      if (pick(0, 4) != 0) voice.notes.push_back({t, std::max<Tick>(1, d - 120 * pick(0, 1)), v});
      t += d;
    }
    s.voices.push_back(voice);
  }
  validateScore(s);
  return s;
}

}  // namespace rhythmform::testing
