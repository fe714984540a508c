#ifndef SSL2D_ACOUSTICS_HPP
#define SSL2D_ACOUSTICS_HPP

#include <cstdint>
#include <vector>

#include "ssl2d/geometry.hpp"

namespace ssl2d {

// Fractional-delay realization for the direct path. RoundToSample is exact
// to test against (max timing error half a sample, 31 us at 16 kHz);
// WindowedSinc interpolates the true delay with a 21-tap Hamming-windowed
// sinc kernel.
enum class DelayMode { RoundToSample, WindowedSinc };

struct AcousticsConfig {
  double speed_of_sound = 343.0;  // m/s; not pinned by the environment, see run config
  int sample_rate = 16000;        // Hz
  int sample_len = 2560;          // samples, 160 ms at 16 kHz
  DelayMode delay_mode = DelayMode::RoundToSample;

  void validate() const {
    require(speed_of_sound > 0.0, Errc::config, "speed_of_sound must be positive");
    require(sample_rate > 0, Errc::config, "sample_rate must be positive");
    require(sample_len > 0, Errc::config, "sample_len must be positive");
  }
};

struct SourceEvent {
  Point2D position;
  std::vector<float> signal;  // mono, at cfg.sample_rate
  double gain = 1.0;
};

// Channel order follows mic_positions order within each array.
struct ArrayClip {
  std::vector<std::vector<float>> channels;
};

struct MultiChannelClip {
  std::vector<ArrayClip> arrays;
  int sample_rate = 16000;

  size_t total_channels() const {
    size_t n = 0;
    for (const auto& a : arrays) n += a.channels.size();
    return n;
  }
};

// Free-field direct path: gain * (1/d) * signal delayed by d/c seconds.
// Output has exactly cfg.sample_len samples; shorter signals are
// zero-padded, longer ones are rejected.
std::vector<float> propagate(const SourceEvent& src, const Point2D& mic,
                             const AcousticsConfig& cfg);

// Sample-wise superposition of propagate() over all sources, channel by
// channel. Summation order is the source list order, so the result is
// bit-identical to adding single-source renders.
MultiChannelClip render_scene(const std::vector<SourceEvent>& sources,
                              const std::vector<MicArray>& arrays, const AcousticsConfig& cfg);

// Mean absolute amplitude at or above threshold (inclusive boundary).
bool energy_gate(const std::vector<float>& signal, double threshold);

}  // namespace ssl2d

#endif  // SSL2D_ACOUSTICS_HPP
