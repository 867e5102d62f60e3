// Minimal Standard MIDI File writer for building parser test inputs.

#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace rhythmform::testing {

struct SmfEvent {
  std::int64_t tick;
  std::vector<std::uint8_t> bytes;  // status + data, or FF type len data
};

inline void putVarLen(std::string& out, std::uint32_t v) {
  std::uint8_t buf[4];
  int n = 0;
  buf[n++] = v & 0x7F;
  while (v >>= 7) buf[n++] = static_cast<std::uint8_t>((v & 0x7F) | 0x80);
  while (n) out.push_back(static_cast<char>(buf[--n]));
}

inline void putU32(std::string& out, std::uint32_t v) {
  for (int s = 24; s >= 0; s -= 8) out.push_back(static_cast<char>((v >> s) & 0xFF));
}

inline void putU16(std::string& out, std::uint16_t v) {
  out.push_back(static_cast<char>(v >> 8));
  out.push_back(static_cast<char>(v & 0xFF));
}

/// Events must be in tick order. An end-of-track meta event is appended at
/// `end_tick` (or the last event tick).
inline std::string smfTrack(const std::vector<SmfEvent>& events, std::int64_t end_tick = -1) {
  std::string body;
  std::int64_t now = 0;
  for (const auto& e : events) {
    putVarLen(body, static_cast<std::uint32_t>(e.tick - now));
    now = e.tick;
    body.append(e.bytes.begin(), e.bytes.end());
  }
  putVarLen(body, static_cast<std::uint32_t>(end_tick > now ? end_tick - now : 0));
  body += std::string("\xFF\x2F\x00", 3);
  std::string chunk = "MTrk";
  putU32(chunk, static_cast<std::uint32_t>(body.size()));
  return chunk + body;
}

inline std::string smfFile(std::uint16_t format, std::uint16_t division, const std::vector<std::string>& tracks) {
  std::string out = "MThd";
  putU32(out, 6);
  putU16(out, format);
  putU16(out, static_cast<std::uint16_t>(tracks.size()));
  putU16(out, division);
  for (const auto& t : tracks) out += t;
  return out;
}

inline SmfEvent noteOn(std::int64_t tick, int pitch, int velocity = 64, int channel = 0) {
  return {tick, {static_cast<std::uint8_t>(0x90 | channel), static_cast<std::uint8_t>(pitch),
                 static_cast<std::uint8_t>(velocity)}};
}

inline SmfEvent noteOff(std::int64_t tick, int pitch, int channel = 0) {
  return {tick, {static_cast<std::uint8_t>(0x80 | channel), static_cast<std::uint8_t>(pitch), 0}};
}

inline SmfEvent timeSignature(std::int64_t tick, int numerator, int denominator_exp) {
  return {tick, {0xFF, 0x58, 0x04, static_cast<std::uint8_t>(numerator), static_cast<std::uint8_t>(denominator_exp),
                 24, 8}};
}

}  // namespace rhythmform::testing
