// JSON rhythm format.
//
//   {
//     "ticks_per_quarter": 480,                       // optional
//     "time_signatures": [{"measure": 0, "numerator": 6, "denominator": 8}],
//     "voices": [[{"onset": 0, "duration": 360}, {"onset": 360, "duration": 120, "tie": false}]],
//     "end_tick": 17280,                              // optional
//     "title": "...",                                 // optional
//     "annotations": [{"measure": 0, "label": "A1", "section": "A"}]   // optional
//   }
//
// A `tie: true` event is merged into the preceding event of its voice.

#pragma once

#include <string>
#include <string_view>

#include "rhythmform/score.h"

namespace rhythmform {

/// Parses the JSON rhythm format. When end_tick is absent it is the last note
/// end rounded up to the next barline.
Score parseRhythmJson(std::string_view text);

/// Serializes a score back into the JSON rhythm format.
std::string toRhythmJson(const Score& score);

}  // namespace rhythmform
