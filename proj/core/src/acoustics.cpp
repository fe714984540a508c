#include "ssl2d/acoustics.hpp"

#include <cmath>

namespace ssl2d {

namespace {

constexpr int kSincHalfTaps = 10;  // 21 taps total

double hamming21(int i) { return 0.54 - 0.46 * std::cos(2.0 * M_PI * i / 20.0); }

double sinc(double x) {
  if (std::abs(x) < 1e-12) return 1.0;
  return std::sin(M_PI * x) / (M_PI * x);
}

}  // namespace

std::vector<float> propagate(const SourceEvent& src, const Point2D& mic,
                             const AcousticsConfig& cfg) {
  cfg.validate();
  const double d = distance(src.position, mic);
  require(d > 0.0, Errc::data, "source coincides with microphone");
  require(static_cast<int>(src.signal.size()) <= cfg.sample_len, Errc::data,
          "source signal longer than sample_len; slice it first");

  const double amplitude = src.gain / d;
  const double delay = d / cfg.speed_of_sound * cfg.sample_rate;  // samples
  const int n = cfg.sample_len;
  const int sig_len = static_cast<int>(src.signal.size());
  std::vector<float> out(static_cast<size_t>(n), 0.0f);

  if (cfg.delay_mode == DelayMode::RoundToSample) {
    const int64_t shift = static_cast<int64_t>(std::llround(delay));
    for (int t = 0; t < n; ++t) {
      const int64_t s = t - shift;
      if (s >= 0 && s < sig_len)
        out[t] = static_cast<float>(amplitude * src.signal[static_cast<size_t>(s)]);
    }
  } else {
    const int64_t shift = static_cast<int64_t>(std::llround(delay));
    const double frac = delay - static_cast<double>(shift);  // in [-0.5, 0.5]
    double taps[2 * kSincHalfTaps + 1];
    for (int k = -kSincHalfTaps; k <= kSincHalfTaps; ++k)
      taps[k + kSincHalfTaps] = sinc(static_cast<double>(k) - frac) * hamming21(k + kSincHalfTaps);
    for (int t = 0; t < n; ++t) {
      double acc = 0.0;
      for (int k = -kSincHalfTaps; k <= kSincHalfTaps; ++k) {
        const int64_t s = t - shift - k;
        if (s >= 0 && s < sig_len) acc += taps[k + kSincHalfTaps] * src.signal[static_cast<size_t>(s)];
      }
      out[t] = static_cast<float>(amplitude * acc);
    }
  }
  return out;
}

MultiChannelClip render_scene(const std::vector<SourceEvent>& sources,
                              const std::vector<MicArray>& arrays, const AcousticsConfig& cfg) {
  cfg.validate();
  require(!sources.empty(), Errc::data, "render_scene needs at least one source");
  require(!arrays.empty(), Errc::config, "render_scene needs at least one microphone array");

  MultiChannelClip clip;
  clip.sample_rate = cfg.sample_rate;
  clip.arrays.resize(arrays.size());
  for (size_t a = 0; a < arrays.size(); ++a) {
    arrays[a].validate();
    clip.arrays[a].channels.resize(arrays[a].mic_positions.size());
    for (size_t m = 0; m < arrays[a].mic_positions.size(); ++m) {
      std::vector<float> acc(static_cast<size_t>(cfg.sample_len), 0.0f);
      for (const SourceEvent& src : sources) {
        const std::vector<float> one = propagate(src, arrays[a].mic_positions[m], cfg);
        for (size_t t = 0; t < acc.size(); ++t) acc[t] += one[t];
      }
      clip.arrays[a].channels[m] = std::move(acc);
    }
  }
  return clip;
}

bool energy_gate(const std::vector<float>& signal, double threshold) {
  require(!signal.empty(), Errc::data, "energy_gate needs a non-empty signal");
  double sum = 0.0;
  for (float v : signal) sum += std::abs(static_cast<double>(v));
  return sum / static_cast<double>(signal.size()) >= threshold;
}

}  // namespace ssl2d
