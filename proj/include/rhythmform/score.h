// Score model and onset/IOI extraction.
//
// All times are integer ticks at the score's ticks_per_quarter resolution.
// Measures are indexed from 0; with a pickup the anacrusis is measure 0.

#pragma once

#include <cstdint>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <vector>

namespace rhythmform {

using Tick = std::int64_t;

inline constexpr int kDefaultTicksPerQuarter = 480;

struct TimeSignature {
  int numerator = 4;
  int denominator = 4;
  int start_measure = 0;

  bool operator==(const TimeSignature&) const = default;
};

struct NoteEvent {
  Tick onset = 0;
  Tick duration = 0;
  int voice = 0;

  bool operator==(const NoteEvent&) const = default;
};

struct Voice {
  int id = 0;
  std::string name;
  std::vector<NoteEvent> notes;  // sorted by onset
};

/// Formal-analysis label attached to a measure (never computed, only drawn
/// and used by structure checks).
struct Annotation {
  int measure = 0;
  std::string label;
  std::string section;
};

struct Score {
  int ticks_per_quarter = kDefaultTicksPerQuarter;
  std::vector<TimeSignature> time_signatures;
  std::vector<Voice> voices;
  Tick end_tick = 0;
  std::vector<Annotation> annotations;
  std::string title;
  /// FNV-1a hash of the bytes the score was parsed from, hex encoded.
  std::string content_hash;

  std::size_t noteCount() const;
  bool hasVoice(int id) const;
};

/// Checks the Score invariants; throws Error(kValidation) on violation.
void validateScore(const Score& score);

/// FNV-1a 64-bit digest rendered as 16 lowercase hex digits.
std::string contentHash(std::string_view bytes);

// ---------------------------------------------------------------------------
// Measure grid
// ---------------------------------------------------------------------------

enum class BeatRule { kDenominator, kCompound };

const char* beatRuleName(BeatRule rule);
BeatRule parseBeatRule(const std::string& name);

/// Ticks per beat for a signature. `compound` groups three denominator
/// notes into one dotted beat when the numerator is 6, 9, 12, ...
Tick beatLengthFor(const TimeSignature& sig, int ticks_per_quarter, BeatRule rule);

/// Ticks per measure for a signature; throws when the division cannot
/// express the denominator note exactly.
Tick measureLengthFor(const TimeSignature& sig, int ticks_per_quarter);

struct Measure {
  int index = 0;
  Tick start = 0;
  Tick end = 0;
  /// Where the measure would start if complete; beat positions are counted
  /// from here (differs from `start` only for a pickup measure).
  Tick origin = 0;
  Tick beat_length = 0;
  bool complete = true;
};

struct MeasureGrid {
  std::vector<Tick> boundaries;  // measure starts, strictly increasing
  std::vector<Tick> beat_length;  // one per measure
  std::vector<Measure> measures;

  std::size_t size() const { return measures.size(); }
  /// Index of the measure containing `tick`, or nullopt past the grid.
  std::optional<std::size_t> measureAt(Tick tick) const;
  /// Number of leading complete-or-pickup measures, excluding a trailing partial one.
  std::size_t fullMeasureCount() const;
};

struct GridOptions {
  BeatRule beat_rule = BeatRule::kDenominator;
  Tick beat_ticks = 0;  // > 0 overrides the rule
  Tick pickup = 0;
};

/// Lays measures from tick 0 (or the pickup) until they cover end_tick.
MeasureGrid measureGrid(const Score& score, const GridOptions& options = {});

/// First measure boundary strictly after `tick` under a pickup-shifted grid of
/// the score's signatures (unbounded: extends past end_tick as needed).
Tick nextBoundaryAfter(const Score& score, Tick tick, Tick pickup = 0);

// ---------------------------------------------------------------------------
// Onsets and IOIs
// ---------------------------------------------------------------------------

struct OnsetSeries {
  std::vector<Tick> onsets;  // strictly increasing
  Tick final_event_length = 0;
};

struct MergeOptions {
  /// Empty means all voices.
  std::set<int> voices;
  /// Events shorter than this are dropped before merging (0 keeps everything).
  Tick min_duration = 0;
  Tick pickup = 0;
};

/// Unions onsets of the selected voices; simultaneous onsets collapse to one
/// event. The last event's length is its notated duration (longest of a
/// chord) extended by trailing rest up to the next barline or end_tick.
OnsetSeries mergeVoices(const Score& score, const MergeOptions& options = {});

struct IOISeries {
  std::vector<Tick> values;
  /// Onset tick of the event each value measures from.
  std::vector<Tick> starts;
  int tick_unit = kDefaultTicksPerQuarter;

  std::size_t size() const { return values.size(); }
  bool empty() const { return values.empty(); }
};

IOISeries extractIoi(const OnsetSeries& series, bool include_final, int tick_unit = kDefaultTicksPerQuarter);

}  // namespace rhythmform
