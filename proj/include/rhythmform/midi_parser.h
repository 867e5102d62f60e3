// Standard MIDI File (format 0/1, PPQ division) to Score.

#pragma once

#include <cstdint>
#include <span>
#include <string_view>

#include "rhythmform/score.h"

namespace rhythmform {

/// Parses SMF bytes. Each (track, channel) pair that carries notes becomes a
/// voice; ids are assigned in (track, channel) order starting at 0.
///
/// A note-on with velocity 0 is a note-off. A second note-on for a pitch that
/// is still sounding truncates the first note at the new onset. Notes still
/// open at end of track are closed there. Malformed chunks raise
/// Error(kParse) naming the byte offset; SMPTE division and format 2 raise
/// Error(kUnsupportedFormat).
Score parseMidi(std::span<const std::uint8_t> bytes);
Score parseMidi(std::string_view bytes);

}  // namespace rhythmform
