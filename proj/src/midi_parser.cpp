#include "rhythmform/midi_parser.h"

#include <algorithm>
#include <array>
#include <map>
#include <utility>
#include <vector>

#include "rhythmform/error.h"

namespace rhythmform {

namespace {

class ByteReader {
 public:
  ByteReader(std::span<const std::uint8_t> bytes, std::size_t begin, std::size_t end)
      : bytes_(bytes), pos_(begin), end_(end) {}

  std::size_t offset() const { return pos_; }
  bool atEnd() const { return pos_ >= end_; }

  std::uint8_t u8() {
    need(1);
    return bytes_[pos_++];
  }
  std::uint8_t peek() {
    need(1);
    return bytes_[pos_];
  }
  std::uint16_t u16() {
    need(2);
    std::uint16_t v = static_cast<std::uint16_t>((bytes_[pos_] << 8) | bytes_[pos_ + 1]);
    pos_ += 2;
    return v;
  }
  std::uint32_t u32() {
    need(4);
    std::uint32_t v = 0;
    for (int i = 0; i < 4; ++i) v = (v << 8) | bytes_[pos_ + i];
    pos_ += 4;
    return v;
  }
  std::uint32_t varLen() {
    const std::size_t start = pos_;
    std::uint32_t v = 0;
    for (int i = 0; i < 4; ++i) {
      std::uint8_t b = u8();
      v = (v << 7) | (b & 0x7F);
      if (!(b & 0x80)) return v;
    }
    fail(start, "variable-length quantity longer than 4 bytes");
  }
  std::span<const std::uint8_t> take(std::size_t n) {
    need(n);
    auto s = bytes_.subspan(pos_, n);
    pos_ += n;
    return s;
  }
  void skip(std::size_t n) { take(n); }

  [[noreturn]] static void fail(std::size_t offset, const std::string& what) {
    throw Error(ErrorKind::kParse, what + " at byte " + std::to_string(offset));
  }

 private:
  void need(std::size_t n) {
    if (n > end_ - std::min(pos_, end_)) fail(pos_, "unexpected end of data");
  }

  std::span<const std::uint8_t> bytes_;
  std::size_t pos_;
  std::size_t end_;
};

struct RawTimeSignature {
  Tick tick;
  int numerator;
  int denominator;
  std::size_t offset;
};

struct TrackNotes {
  // (channel) -> notes
  std::map<int, std::vector<NoteEvent>> by_channel;
  Tick end_tick = 0;
};

TrackNotes parseTrack(ByteReader& in, std::vector<RawTimeSignature>& signatures) {
  TrackNotes out;
  // open[channel][pitch] = onset of the sounding note
  std::array<std::array<Tick, 128>, 16> open;
  for (auto& ch : open) ch.fill(-1);

  auto close = [&](int channel, int pitch, Tick tick) {
    Tick& start = open[channel][pitch];
    if (start < 0) return;
    if (tick > start) out.by_channel[channel].push_back({start, tick - start, 0});
    start = -1;
  };

  Tick now = 0;
  std::uint8_t running = 0;
  bool ended = false;
  while (!in.atEnd() && !ended) {
    now += in.varLen();
    const std::size_t event_offset = in.offset();
    std::uint8_t status = in.peek();
    if (status & 0x80) {
      in.u8();
    } else {
      if (running == 0) ByteReader::fail(event_offset, "data byte without running status");
      status = running;
    }

    if (status == 0xFF) {
      const std::uint8_t type = in.u8();
      const std::uint32_t len = in.varLen();
      auto data = in.take(len);
      if (type == 0x2F) {
        ended = true;
      } else if (type == 0x58) {
        if (len < 2) ByteReader::fail(event_offset, "time signature meta event too short");
        if (data[1] > 5) ByteReader::fail(event_offset, "time signature denominator exponent out of range");
        signatures.push_back({now, data[0], 1 << data[1], event_offset});
      }
      running = 0;
      continue;
    }
    if (status == 0xF0 || status == 0xF7) {
      in.skip(in.varLen());
      running = 0;
      continue;
    }
    if (status >= 0xF1) ByteReader::fail(event_offset, "unexpected system message in track");

    running = status;
    const int channel = status & 0x0F;
    switch (status & 0xF0) {
      case 0x80: {
        const int pitch = in.u8() & 0x7F;
        in.u8();
        close(channel, pitch, now);
        break;
      }
      case 0x90: {
        const int pitch = in.u8() & 0x7F;
        const int velocity = in.u8();
        close(channel, pitch, now);
        if (velocity > 0) open[channel][pitch] = now;
        break;
      }
      case 0xA0:
      case 0xB0:
      case 0xE0:
        in.skip(2);
        break;
      case 0xC0:
      case 0xD0:
        in.skip(1);
        break;
      default:
        ByteReader::fail(event_offset, "invalid status byte");
    }
  }
  if (!ended) ByteReader::fail(in.offset(), "track chunk without end-of-track event");
  for (int ch = 0; ch < 16; ++ch) {
    for (int p = 0; p < 128; ++p) close(ch, p, now);
  }
  out.end_tick = now;
  return out;
}

// Converts tick-stamped signatures into measure-indexed ones.
std::vector<TimeSignature> signaturesToMeasures(std::vector<RawTimeSignature> raw, int tpq) {
  std::stable_sort(raw.begin(), raw.end(),
                   [](const RawTimeSignature& a, const RawTimeSignature& b) { return a.tick < b.tick; });
  // Keep the last signature stamped at any given tick.
  std::vector<RawTimeSignature> unique;
  for (const auto& r : raw) {
    if (!unique.empty() && unique.back().tick == r.tick) {
      unique.back() = r;
    } else {
      unique.push_back(r);
    }
  }
  std::vector<TimeSignature> result;
  if (unique.empty() || unique.front().tick != 0) result.push_back({4, 4, 0});
  Tick tick = 0;
  int measure = 0;
  for (const auto& r : unique) {
    if (!result.empty()) {
      const Tick len = measureLengthFor(result.back(), tpq);
      const Tick elapsed = r.tick - tick;
      if (elapsed % len != 0) {
        throw Error(ErrorKind::kValidation, "time signature change at tick " + std::to_string(r.tick) +
                                                " is not on a measure boundary");
      }
      measure += static_cast<int>(elapsed / len);
      tick = r.tick;
    }
    TimeSignature sig{r.numerator, r.denominator, measure};
    if (sig.numerator < 1) ByteReader::fail(r.offset, "time signature numerator must be >= 1");
    if (!result.empty() && result.back().start_measure == measure) {
      result.back() = sig;
    } else {
      result.push_back(sig);
    }
  }
  return result;
}

}  // namespace

Score parseMidi(std::span<const std::uint8_t> bytes) {
  ByteReader header(bytes, 0, bytes.size());
  if (bytes.size() < 14 || !std::equal(bytes.begin(), bytes.begin() + 4, "MThd")) {
    ByteReader::fail(0, "missing MThd header chunk");
  }
  header.skip(4);
  const std::uint32_t header_len = header.u32();
  if (header_len < 6) ByteReader::fail(4, "MThd chunk length must be at least 6");
  const std::uint16_t format = header.u16();
  const std::uint16_t track_count = header.u16();
  const std::uint16_t division = header.u16();
  if (format > 1) {
    throw Error(ErrorKind::kUnsupportedFormat, "SMF format " + std::to_string(format) + " is not supported");
  }
  if (division & 0x8000) {
    throw Error(ErrorKind::kUnsupportedFormat, "SMPTE time division is not supported");
  }
  if (division == 0) ByteReader::fail(12, "division must be positive");
  header.skip(header_len - 6);

  Score score;
  score.ticks_per_quarter = division;
  score.content_hash = contentHash(std::string_view(reinterpret_cast<const char*>(bytes.data()), bytes.size()));

  std::vector<RawTimeSignature> signatures;
  std::vector<TrackNotes> tracks;
  std::size_t pos = header.offset();
  while (tracks.size() < track_count) {
    if (pos + 8 > bytes.size()) ByteReader::fail(pos, "missing track chunk");
    ByteReader chunk(bytes, pos, bytes.size());
    auto tag = chunk.take(4);
    const std::uint32_t len = chunk.u32();
    const std::size_t body = chunk.offset();
    if (len > bytes.size() - body) ByteReader::fail(pos, "chunk length exceeds file size");
    if (std::equal(tag.begin(), tag.end(), "MTrk")) {
      ByteReader track(bytes, body, body + len);
      tracks.push_back(parseTrack(track, signatures));
    } else if (!std::all_of(tag.begin(), tag.end(), [](std::uint8_t c) { return c >= 0x20 && c < 0x7F; })) {
      ByteReader::fail(pos, "malformed chunk header");
    }
    pos = body + len;
  }

  score.time_signatures = signaturesToMeasures(std::move(signatures), score.ticks_per_quarter);
  int next_id = 0;
  for (std::size_t t = 0; t < tracks.size(); ++t) {
    score.end_tick = std::max(score.end_tick, tracks[t].end_tick);
    for (auto& [channel, notes] : tracks[t].by_channel) {
      if (notes.empty()) continue;
      Voice voice;
      voice.id = next_id++;
      voice.name = "track " + std::to_string(t) + " channel " + std::to_string(channel);
      std::stable_sort(notes.begin(), notes.end(),
                       [](const NoteEvent& a, const NoteEvent& b) { return a.onset < b.onset; });
      for (auto& n : notes) {
        n.voice = voice.id;
        score.end_tick = std::max(score.end_tick, n.onset + n.duration);
      }
      voice.notes = std::move(notes);
      score.voices.push_back(std::move(voice));
    }
  }
  validateScore(score);
  return score;
}

Score parseMidi(std::string_view bytes) {
  return parseMidi(std::span<const std::uint8_t>(reinterpret_cast<const std::uint8_t*>(bytes.data()), bytes.size()));
}

}  // namespace rhythmform
