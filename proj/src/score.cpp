#include "rhythmform/score.h"

#include <algorithm>
#include <cstdio>

#include "rhythmform/error.h"

namespace rhythmform {

namespace {

bool isPowerOfTwoDenominator(int d) {
  return d == 1 || d == 2 || d == 4 || d == 8 || d == 16 || d == 32;
}

const TimeSignature& signatureForMeasure(const Score& score, int measure) {
  const TimeSignature* current = &score.time_signatures.front();
  for (const auto& sig : score.time_signatures) {
    if (sig.start_measure > measure) break;
    current = &sig;
  }
  return *current;
}

/// Walks measures from tick 0 and calls `visit(index, start, nominal_length)`
/// until it returns false.
template <typename Visit>
void walkMeasures(const Score& score, Tick pickup, Visit&& visit) {
  if (score.time_signatures.empty()) {
    throw Error(ErrorKind::kValidation, "score has no time signature");
  }
  int index = 0;
  Tick start = 0;
  if (pickup > 0) {
    const Tick first_len = measureLengthFor(signatureForMeasure(score, 0), score.ticks_per_quarter);
    if (pickup >= first_len) {
      throw Error(ErrorKind::kArgument, "pickup must be shorter than the first measure");
    }
    if (!visit(index, start, pickup)) return;
    index = 1;
    start = pickup;
  }
  for (;; ++index) {
    const Tick len = measureLengthFor(signatureForMeasure(score, index), score.ticks_per_quarter);
    if (!visit(index, start, len)) return;
    start += len;
  }
}

}  // namespace

std::size_t Score::noteCount() const {
  std::size_t n = 0;
  for (const auto& v : voices) n += v.notes.size();
  return n;
}

bool Score::hasVoice(int id) const {
  return std::any_of(voices.begin(), voices.end(), [id](const Voice& v) { return v.id == id; });
}

void validateScore(const Score& score) {
  if (score.ticks_per_quarter <= 0) {
    throw Error(ErrorKind::kValidation, "ticks_per_quarter must be positive");
  }
  if (score.time_signatures.empty() || score.time_signatures.front().start_measure != 0) {
    throw Error(ErrorKind::kValidation, "first time signature must start at measure 0");
  }
  for (std::size_t i = 0; i < score.time_signatures.size(); ++i) {
    const auto& sig = score.time_signatures[i];
    if (sig.numerator < 1) {
      throw Error(ErrorKind::kValidation, "time signature numerator must be >= 1");
    }
    if (!isPowerOfTwoDenominator(sig.denominator)) {
      throw Error(ErrorKind::kValidation,
                  "time signature denominator must be one of 1,2,4,8,16,32 (got " +
                      std::to_string(sig.denominator) + ")");
    }
    if (i > 0 && sig.start_measure <= score.time_signatures[i - 1].start_measure) {
      throw Error(ErrorKind::kValidation, "time signatures must have strictly increasing start measures");
    }
    measureLengthFor(sig, score.ticks_per_quarter);
  }
  Tick max_end = 0;
  for (const auto& voice : score.voices) {
    for (const auto& note : voice.notes) {
      if (note.onset < 0) throw Error(ErrorKind::kValidation, "note onset must be non-negative");
      if (note.duration <= 0) throw Error(ErrorKind::kValidation, "note duration must be positive");
      max_end = std::max(max_end, note.onset + note.duration);
    }
  }
  if (score.end_tick < max_end) {
    throw Error(ErrorKind::kValidation, "end_tick precedes the end of the last note");
  }
}

std::string contentHash(std::string_view bytes) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : bytes) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

const char* beatRuleName(BeatRule rule) {
  return rule == BeatRule::kCompound ? "compound" : "denominator";
}

BeatRule parseBeatRule(const std::string& name) {
  if (name == "denominator") return BeatRule::kDenominator;
  if (name == "compound") return BeatRule::kCompound;
  throw Error(ErrorKind::kArgument, "unknown beat rule '" + name + "'");
}

Tick measureLengthFor(const TimeSignature& sig, int ticks_per_quarter) {
  const Tick whole = Tick{4} * ticks_per_quarter;
  if (whole % sig.denominator != 0) {
    throw Error(ErrorKind::kValidation, "ticks_per_quarter cannot express 1/" +
                                            std::to_string(sig.denominator) + " notes exactly");
  }
  return sig.numerator * (whole / sig.denominator);
}

Tick beatLengthFor(const TimeSignature& sig, int ticks_per_quarter, BeatRule rule) {
  const Tick unit = Tick{4} * ticks_per_quarter / sig.denominator;
  if (rule == BeatRule::kCompound && sig.numerator > 3 && sig.numerator % 3 == 0) {
    return 3 * unit;
  }
  return unit;
}

std::optional<std::size_t> MeasureGrid::measureAt(Tick tick) const {
  if (measures.empty() || tick < measures.front().start || tick >= measures.back().end) {
    return std::nullopt;
  }
  auto it = std::upper_bound(boundaries.begin(), boundaries.end(), tick);
  return static_cast<std::size_t>(std::distance(boundaries.begin(), it) - 1);
}

std::size_t MeasureGrid::fullMeasureCount() const {
  std::size_t n = measures.size();
  while (n > 0 && !measures[n - 1].complete && n - 1 > 0) --n;
  return n;
}

MeasureGrid measureGrid(const Score& score, const GridOptions& options) {
  MeasureGrid grid;
  const Tick end = std::max<Tick>(score.end_tick, 1);
  walkMeasures(score, options.pickup, [&](int index, Tick start, Tick len) {
    if (start >= end) return false;
    const auto& sig = signatureForMeasure(score, index);
    Measure m;
    m.index = index;
    m.start = start;
    m.end = start + len;
    const bool is_pickup = options.pickup > 0 && index == 0;
    const Tick nominal = is_pickup ? measureLengthFor(sig, score.ticks_per_quarter) : len;
    m.origin = m.end - nominal;
    m.beat_length = options.beat_ticks > 0 ? options.beat_ticks
                                           : beatLengthFor(sig, score.ticks_per_quarter, options.beat_rule);
    // A pickup is incomplete by construction but still counts as a measure.
    m.complete = !is_pickup && m.end <= end;
    grid.boundaries.push_back(m.start);
    grid.beat_length.push_back(m.beat_length);
    grid.measures.push_back(m);
    return true;
  });
  return grid;
}

Tick nextBoundaryAfter(const Score& score, Tick tick, Tick pickup) {
  Tick result = 0;
  walkMeasures(score, pickup, [&](int, Tick start, Tick len) {
    result = start + len;
    return result <= tick;
  });
  return result;
}

OnsetSeries mergeVoices(const Score& score, const MergeOptions& options) {
  for (int id : options.voices) {
    if (!score.hasVoice(id)) {
      throw Error(ErrorKind::kArgument, "unknown voice id " + std::to_string(id));
    }
  }
  std::vector<NoteEvent> events;
  for (const auto& voice : score.voices) {
    if (!options.voices.empty() && !options.voices.count(voice.id)) continue;
    for (const auto& note : voice.notes) {
      if (note.duration < options.min_duration) continue;
      events.push_back(note);
    }
  }
  OnsetSeries series;
  if (events.empty()) return series;
  std::sort(events.begin(), events.end(), [](const NoteEvent& a, const NoteEvent& b) {
    return a.onset != b.onset ? a.onset < b.onset : a.duration < b.duration;
  });
  for (const auto& e : events) {
    if (series.onsets.empty() || series.onsets.back() != e.onset) series.onsets.push_back(e.onset);
  }
  // Sorted by (onset, duration): the last event is the longest at the last onset.
  const NoteEvent& last = events.back();
  const Tick note_end = last.onset + last.duration;
  const Tick barline = nextBoundaryAfter(score, note_end - 1, options.pickup);
  const Tick extended = std::min(barline, std::max(score.end_tick, note_end));
  series.final_event_length = std::max(note_end, extended) - last.onset;
  return series;
}

IOISeries extractIoi(const OnsetSeries& series, bool include_final, int tick_unit) {
  const std::size_t needed = include_final ? 1 : 2;
  if (series.onsets.size() < needed) {
    throw Error(ErrorKind::kEmptySeries, "need at least " + std::to_string(needed) +
                                             " onsets to form an IOI series, got " +
                                             std::to_string(series.onsets.size()));
  }
  IOISeries ioi;
  ioi.tick_unit = tick_unit;
  for (std::size_t i = 0; i + 1 < series.onsets.size(); ++i) {
    ioi.values.push_back(series.onsets[i + 1] - series.onsets[i]);
    ioi.starts.push_back(series.onsets[i]);
  }
  if (include_final) {
    ioi.values.push_back(series.final_event_length);
    ioi.starts.push_back(series.onsets.back());
  }
  return ioi;
}

}  // namespace rhythmform
