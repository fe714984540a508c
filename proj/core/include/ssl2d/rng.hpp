#ifndef SSL2D_RNG_HPP
#define SSL2D_RNG_HPP

#include <cstdint>
#include <random>

namespace ssl2d {

// splitmix64; used to derive independent, reproducible sub-streams from
// (seed, index...) tuples so parallel sample generation stays deterministic.
inline uint64_t splitmix64(uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

inline uint64_t mix_seed(uint64_t seed, uint64_t a) { return splitmix64(splitmix64(seed) ^ a); }

inline uint64_t mix_seed(uint64_t seed, uint64_t a, uint64_t b) {
  return splitmix64(mix_seed(seed, a) ^ splitmix64(b + 0x632be59bd9b4e019ULL));
}

inline std::mt19937_64 make_rng(uint64_t seed) { return std::mt19937_64(splitmix64(seed)); }

inline std::mt19937_64 make_stream(uint64_t seed, uint64_t a) {
  return std::mt19937_64(mix_seed(seed, a));
}

inline std::mt19937_64 make_stream(uint64_t seed, uint64_t a, uint64_t b) {
  return std::mt19937_64(mix_seed(seed, a, b));
}

}  // namespace ssl2d

#endif  // SSL2D_RNG_HPP
