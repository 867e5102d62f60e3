#include "rhythmform/rhythm_json.h"

#include <algorithm>

#include <json.hpp>

#include "rhythmform/error.h"

namespace rhythmform {

namespace {

using nlohmann::json;

[[noreturn]] void schemaError(const std::string& field, const std::string& what) {
  throw Error(ErrorKind::kParse, field + ": " + what);
}

std::int64_t requireInt(const json& obj, const char* key, const std::string& path) {
  const auto it = obj.find(key);
  if (it == obj.end()) schemaError(path + "." + key, "missing required field");
  if (!it->is_number_integer()) schemaError(path + "." + key, "must be an integer");
  return it->get<std::int64_t>();
}

std::int64_t optionalInt(const json& obj, const char* key, const std::string& path, std::int64_t fallback) {
  const auto it = obj.find(key);
  if (it == obj.end()) return fallback;
  if (!it->is_number_integer()) schemaError(path + "." + key, "must be an integer");
  return it->get<std::int64_t>();
}

std::string optionalString(const json& obj, const char* key, const std::string& path) {
  const auto it = obj.find(key);
  if (it == obj.end()) return {};
  if (!it->is_string()) schemaError(path + "." + key, "must be a string");
  return it->get<std::string>();
}

Voice parseVoice(const json& arr, int id) {
  const std::string path = "voices[" + std::to_string(id) + "]";
  if (!arr.is_array()) schemaError(path, "must be an array of events");
  Voice voice;
  voice.id = id;
  voice.name = "voice " + std::to_string(id);
  Tick previous_onset = -1;
  for (std::size_t i = 0; i < arr.size(); ++i) {
    const std::string event_path = path + "[" + std::to_string(i) + "]";
    const json& ev = arr[i];
    if (!ev.is_object()) schemaError(event_path, "must be an object");
    const Tick onset = requireInt(ev, "onset", event_path);
    const Tick duration = requireInt(ev, "duration", event_path);
    bool tie = false;
    if (auto it = ev.find("tie"); it != ev.end()) {
      if (!it->is_boolean()) schemaError(event_path + ".tie", "must be a boolean");
      tie = it->get<bool>();
    }
    if (onset < 0) schemaError(event_path + ".onset", "must be non-negative");
    if (duration <= 0) {
      throw Error(ErrorKind::kValidation, event_path + ".duration: must be positive (got " +
                                              std::to_string(duration) + ")");
    }
    if (onset <= previous_onset) schemaError(event_path + ".onset", "onsets within a voice must be strictly increasing");
    previous_onset = onset;
    if (tie) {
      if (voice.notes.empty()) schemaError(event_path + ".tie", "tied event has no predecessor");
      NoteEvent& prev = voice.notes.back();
      prev.duration = std::max(prev.onset + prev.duration, onset + duration) - prev.onset;
      continue;
    }
    voice.notes.push_back({onset, duration, id});
  }
  return voice;
}

}  // namespace

Score parseRhythmJson(std::string_view text) {
  json doc;
  try {
    doc = json::parse(text.begin(), text.end());
  } catch (const json::parse_error& e) {
    throw Error(ErrorKind::kParse, std::string("invalid JSON: ") + e.what());
  }
  if (!doc.is_object()) schemaError("$", "top level must be an object");

  Score score;
  score.content_hash = contentHash(text);
  const std::int64_t tpq = optionalInt(doc, "ticks_per_quarter", "$", kDefaultTicksPerQuarter);
  if (tpq <= 0) schemaError("$.ticks_per_quarter", "must be positive");
  score.ticks_per_quarter = static_cast<int>(tpq);
  score.title = optionalString(doc, "title", "$");

  if (auto it = doc.find("time_signatures"); it != doc.end()) {
    if (!it->is_array()) schemaError("$.time_signatures", "must be an array");
    for (std::size_t i = 0; i < it->size(); ++i) {
      const std::string path = "time_signatures[" + std::to_string(i) + "]";
      const json& ts = (*it)[i];
      if (!ts.is_object()) schemaError(path, "must be an object");
      score.time_signatures.push_back({static_cast<int>(requireInt(ts, "numerator", path)),
                                       static_cast<int>(requireInt(ts, "denominator", path)),
                                       static_cast<int>(requireInt(ts, "measure", path))});
    }
  }
  if (score.time_signatures.empty()) score.time_signatures.push_back({4, 4, 0});

  const auto voices = doc.find("voices");
  if (voices == doc.end()) schemaError("$.voices", "missing required field");
  if (!voices->is_array()) schemaError("$.voices", "must be an array of voices");
  for (std::size_t v = 0; v < voices->size(); ++v) {
    score.voices.push_back(parseVoice((*voices)[v], static_cast<int>(v)));
  }

  if (auto it = doc.find("annotations"); it != doc.end()) {
    if (!it->is_array()) schemaError("$.annotations", "must be an array");
    for (std::size_t i = 0; i < it->size(); ++i) {
      const std::string path = "annotations[" + std::to_string(i) + "]";
      const json& a = (*it)[i];
      if (!a.is_object()) schemaError(path, "must be an object");
      score.annotations.push_back({static_cast<int>(requireInt(a, "measure", path)),
                                   optionalString(a, "label", path), optionalString(a, "section", path)});
    }
  }

  Tick last_end = 0;
  for (const auto& voice : score.voices) {
    for (const auto& n : voice.notes) last_end = std::max(last_end, n.onset + n.duration);
  }
  // Validate signatures before walking the grid for the barline.
  score.end_tick = last_end;
  validateScore(score);
  if (doc.contains("end_tick")) {
    score.end_tick = optionalInt(doc, "end_tick", "$", last_end);
  } else if (last_end > 0) {
    score.end_tick = nextBoundaryAfter(score, last_end - 1);
  }
  validateScore(score);
  return score;
}

std::string toRhythmJson(const Score& score) {
  json doc;
  doc["ticks_per_quarter"] = score.ticks_per_quarter;
  if (!score.title.empty()) doc["title"] = score.title;
  doc["time_signatures"] = json::array();
  for (const auto& ts : score.time_signatures) {
    doc["time_signatures"].push_back(
        {{"measure", ts.start_measure}, {"numerator", ts.numerator}, {"denominator", ts.denominator}});
  }
  doc["voices"] = json::array();
  for (const auto& voice : score.voices) {
    json arr = json::array();
    for (const auto& n : voice.notes) arr.push_back({{"onset", n.onset}, {"duration", n.duration}});
    doc["voices"].push_back(std::move(arr));
  }
  doc["end_tick"] = score.end_tick;
  if (!score.annotations.empty()) {
    doc["annotations"] = json::array();
    for (const auto& a : score.annotations) {
      doc["annotations"].push_back({{"measure", a.measure}, {"label", a.label}, {"section", a.section}});
    }
  }
  return doc.dump(2) + "\n";
}

}  // namespace rhythmform
