#include "obhs/wav.hpp"

#include <cstring>
#include <optional>
#include <string>

#include "obhs/error.hpp"

namespace obhs {

namespace {

std::uint32_t le32(const std::uint8_t* p) {
  return std::uint32_t{p[0]} | std::uint32_t{p[1]} << 8 | std::uint32_t{p[2]} << 16 |
         std::uint32_t{p[3]} << 24;
}
std::uint16_t le16(const std::uint8_t* p) { return static_cast<std::uint16_t>(p[0] | p[1] << 8); }

bool tag_is(const std::uint8_t* p, const char* tag) { return std::memcmp(p, tag, 4) == 0; }

[[noreturn]] void unsupported(std::string message, std::uint64_t offset) {
  throw Error(ErrorKind::kUnsupportedFormat, std::move(message), offset);
}

void append_le(std::vector<std::uint8_t>& out, std::uint32_t value, int bytes) {
  for (int i = 0; i < bytes; ++i) out.push_back(static_cast<std::uint8_t>(value >> (8 * i)));
}
void append_tag(std::vector<std::uint8_t>& out, const char* tag) { out.insert(out.end(), tag, tag + 4); }

}  // namespace

WavData read_wav(std::span<const std::uint8_t> bytes) {
  if (bytes.size() < 12 || !tag_is(&bytes[0], "RIFF") || !tag_is(&bytes[8], "WAVE")) {
    unsupported("not a RIFF/WAVE file", 0);
  }

  std::optional<AudioMeta> meta;
  std::optional<std::span<const std::uint8_t>> data;
  std::size_t pos = 12;
  while (pos + 8 <= bytes.size()) {
    const std::uint8_t* chunk = &bytes[pos];
    const std::uint64_t size = le32(chunk + 4);
    const std::size_t body = pos + 8;
    if (size > bytes.size() - body) {
      unsupported("chunk '" + std::string(reinterpret_cast<const char*>(chunk), 4) +
                      "' runs past the end of the file",
                  pos);
    }
    if (tag_is(chunk, "fmt ")) {
      if (size < 16) unsupported("fmt chunk is too short", pos);
      const std::uint8_t* f = &bytes[body];
      const std::uint16_t tag = le16(f);
      if (tag != 1) unsupported("format tag " + std::to_string(tag) + " is not integer PCM", body);
      AudioMeta m;
      m.channels = le16(f + 2);
      m.sample_rate = le32(f + 4);
      m.bits_per_sample = le16(f + 14);
      const std::uint16_t block_align = le16(f + 12);
      if (m.bits_per_sample != 16) {
        unsupported(std::to_string(m.bits_per_sample) + "-bit PCM is not supported", body + 14);
      }
      if (m.channels == 0) unsupported("fmt chunk declares zero channels", body + 2);
      if (block_align != 2u * m.channels) unsupported("fmt block align is inconsistent", body + 12);
      meta = m;
    } else if (tag_is(chunk, "data")) {
      data = bytes.subspan(body, static_cast<std::size_t>(size));
    }
    pos = body + static_cast<std::size_t>(size) + (size & 1);
  }

  if (!meta) unsupported("missing fmt chunk", 12);
  if (!data) unsupported("missing data chunk", 12);
  if (data->size() % (2u * meta->channels) != 0) {
    unsupported("data chunk is not a whole number of sample frames", 12);
  }

  WavData out{*meta, {}};
  out.samples.resize(data->size() / 2);
  for (std::size_t i = 0; i < out.samples.size(); ++i) out.samples[i] = le16(&(*data)[2 * i]);
  return out;
}

std::size_t write_wav(const AudioMeta& meta, std::span<const Symbol> samples,
                      std::vector<std::uint8_t>& sink) {
  if (meta.bits_per_sample != 16) fail(ErrorKind::kInvalidInput, "only 16-bit PCM can be written");
  if (meta.channels == 0) fail(ErrorKind::kInvalidInput, "channel count must be at least 1");
  const std::uint64_t data_bytes = 2 * static_cast<std::uint64_t>(samples.size());
  if (data_bytes > 0xFFFFFFFFull - 36) fail(ErrorKind::kInvalidInput, "too many samples for a WAV file");

  const std::size_t before = sink.size();
  sink.reserve(before + kWavHeaderBytes + data_bytes);
  append_tag(sink, "RIFF");
  append_le(sink, static_cast<std::uint32_t>(36 + data_bytes), 4);
  append_tag(sink, "WAVE");
  append_tag(sink, "fmt ");
  append_le(sink, 16, 4);
  append_le(sink, 1, 2);
  append_le(sink, meta.channels, 2);
  append_le(sink, meta.sample_rate, 4);
  append_le(sink, meta.sample_rate * 2u * meta.channels, 4);
  append_le(sink, 2u * meta.channels, 2);
  append_le(sink, 16, 2);
  append_tag(sink, "data");
  append_le(sink, static_cast<std::uint32_t>(data_bytes), 4);
  for (Symbol s : samples) append_le(sink, s, 2);
  return sink.size() - before;
}

}  // namespace obhs
