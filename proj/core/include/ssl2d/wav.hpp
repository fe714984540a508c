#ifndef SSL2D_WAV_HPP
#define SSL2D_WAV_HPP

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <string>
#include <vector>

namespace ssl2d {

enum class WavFormat { Pcm16, Float32 };

struct WavData {
  int sample_rate = 16000;
  std::vector<std::vector<float>> channels;  // [n_channels][n_samples]

  size_t frames() const { return channels.empty() ? 0 : channels[0].size(); }
};

WavData read_wav(const std::string& path);
void write_wav(const std::string& path, const WavData& wav, WavFormat format = WavFormat::Pcm16);

inline int16_t pcm16_quantize(float v) {
  const long q = std::lround(static_cast<double>(v) * 32767.0);
  return static_cast<int16_t>(std::clamp(q, -32768L, 32767L));
}

inline float pcm16_dequantize(int16_t q) { return static_cast<float>(q) / 32767.0f; }

// Value as it will read back from a 16-bit PCM file.
inline float pcm16_roundtrip(float v) { return pcm16_dequantize(pcm16_quantize(v)); }

}  // namespace ssl2d

#endif  // SSL2D_WAV_HPP
