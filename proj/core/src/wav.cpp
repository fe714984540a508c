#include "ssl2d/wav.hpp"

#include <cstring>
#include <fstream>

#include "ssl2d/error.hpp"

namespace ssl2d {

namespace {

void put_u16(std::string& buf, uint16_t v) {
  buf.push_back(static_cast<char>(v & 0xff));
  buf.push_back(static_cast<char>((v >> 8) & 0xff));
}

void put_u32(std::string& buf, uint32_t v) {
  for (int i = 0; i < 4; ++i) buf.push_back(static_cast<char>((v >> (8 * i)) & 0xff));
}

uint16_t get_u16(const uint8_t* p) { return static_cast<uint16_t>(p[0] | (p[1] << 8)); }

uint32_t get_u32(const uint8_t* p) {
  return static_cast<uint32_t>(p[0]) | (static_cast<uint32_t>(p[1]) << 8) |
         (static_cast<uint32_t>(p[2]) << 16) | (static_cast<uint32_t>(p[3]) << 24);
}

float f32_from_le(const uint8_t* p) {
  uint32_t bits = get_u32(p);
  float out;
  std::memcpy(&out, &bits, 4);
  return out;
}

}  // namespace

WavData read_wav(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  require(in.good(), Errc::io, "cannot open WAV file: " + path);
  std::string bytes((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
  const uint8_t* p = reinterpret_cast<const uint8_t*>(bytes.data());
  const size_t n = bytes.size();
  require(n >= 44 && std::memcmp(p, "RIFF", 4) == 0 && std::memcmp(p + 8, "WAVE", 4) == 0,
          Errc::audio, "not a RIFF/WAVE file: " + path);

  uint16_t format = 0, n_channels = 0, bits = 0;
  uint32_t sample_rate = 0;
  size_t data_off = 0, data_len = 0;
  size_t off = 12;
  while (off + 8 <= n) {
    const uint32_t chunk_len = get_u32(p + off + 4);
    if (std::memcmp(p + off, "fmt ", 4) == 0) {
      require(off + 8 + 16 <= n, Errc::audio, "truncated fmt chunk: " + path);
      format = get_u16(p + off + 8);
      n_channels = get_u16(p + off + 10);
      sample_rate = get_u32(p + off + 12);
      bits = get_u16(p + off + 22);
    } else if (std::memcmp(p + off, "data", 4) == 0) {
      data_off = off + 8;
      data_len = chunk_len;
    }
    off += 8 + chunk_len + (chunk_len & 1);
  }
  require(n_channels > 0 && sample_rate > 0, Errc::audio, "missing fmt chunk: " + path);
  require(data_off != 0, Errc::audio, "missing data chunk: " + path);
  require(data_off + data_len <= n, Errc::audio, "truncated data chunk: " + path);

  WavData wav;
  wav.sample_rate = static_cast<int>(sample_rate);
  wav.channels.resize(n_channels);
  if (format == 1 && bits == 16) {
    const size_t frames = data_len / (2 * n_channels);
    for (auto& ch : wav.channels) ch.resize(frames);
    const uint8_t* d = p + data_off;
    for (size_t t = 0; t < frames; ++t)
      for (uint16_t c = 0; c < n_channels; ++c) {
        const int16_t q = static_cast<int16_t>(get_u16(d + 2 * (t * n_channels + c)));
        wav.channels[c][t] = pcm16_dequantize(q);
      }
  } else if (format == 3 && bits == 32) {
    const size_t frames = data_len / (4 * n_channels);
    for (auto& ch : wav.channels) ch.resize(frames);
    const uint8_t* d = p + data_off;
    for (size_t t = 0; t < frames; ++t)
      for (uint16_t c = 0; c < n_channels; ++c)
        wav.channels[c][t] = f32_from_le(d + 4 * (t * n_channels + c));
  } else {
    fail(Errc::audio, "unsupported WAV encoding (want PCM16 or float32): " + path);
  }
  return wav;
}

void write_wav(const std::string& path, const WavData& wav, WavFormat format) {
  require(!wav.channels.empty(), Errc::audio, "WAV needs at least one channel");
  const size_t frames = wav.channels[0].size();
  for (const auto& ch : wav.channels)
    require(ch.size() == frames, Errc::audio, "WAV channels must have equal length");

  const uint16_t n_channels = static_cast<uint16_t>(wav.channels.size());
  const uint16_t bytes_per_sample = format == WavFormat::Pcm16 ? 2 : 4;
  const uint32_t data_len = static_cast<uint32_t>(frames * n_channels * bytes_per_sample);

  std::string buf;
  buf.reserve(44 + data_len);
  buf.append("RIFF");
  put_u32(buf, 36 + data_len);
  buf.append("WAVE");
  buf.append("fmt ");
  put_u32(buf, 16);
  put_u16(buf, format == WavFormat::Pcm16 ? 1 : 3);
  put_u16(buf, n_channels);
  put_u32(buf, static_cast<uint32_t>(wav.sample_rate));
  put_u32(buf, static_cast<uint32_t>(wav.sample_rate) * n_channels * bytes_per_sample);
  put_u16(buf, static_cast<uint16_t>(n_channels * bytes_per_sample));
  put_u16(buf, static_cast<uint16_t>(bytes_per_sample * 8));
  buf.append("data");
  put_u32(buf, data_len);
  for (size_t t = 0; t < frames; ++t)
    for (uint16_t c = 0; c < n_channels; ++c) {
      if (format == WavFormat::Pcm16) {
        put_u16(buf, static_cast<uint16_t>(pcm16_quantize(wav.channels[c][t])));
      } else {
        uint32_t bits;
        std::memcpy(&bits, &wav.channels[c][t], 4);
        put_u32(buf, bits);
      }
    }

  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  require(out.good(), Errc::io, "cannot write WAV file: " + path);
  out.write(buf.data(), static_cast<std::streamsize>(buf.size()));
  require(out.good(), Errc::io, "short write on WAV file: " + path);
}

}  // namespace ssl2d
