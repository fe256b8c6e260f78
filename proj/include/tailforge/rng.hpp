#pragma once

// Counter-based random number derivation. Every sample owns an independent
// engine derived from (base seed, stream, index), so results do not depend on
// how work is split across threads and any single sample can be replayed.

#include <cstdint>
#include <random>
#include <string>

namespace tailforge {

inline std::uint64_t splitmix64(std::uint64_t& state) {
  state += 0x9e3779b97f4a7c15ULL;
  std::uint64_t z = state;
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

// Identifies one sample's stream: (base, stream, index) fully determine it.
struct SeedTag {
  std::uint64_t base = 0;
  std::uint64_t stream = 0;
  std::uint64_t index = 0;

  std::string to_string() const {
    return "seed_tag{base=" + std::to_string(base) + ", stream=" + std::to_string(stream) +
           ", index=" + std::to_string(index) + "}";
  }
  friend bool operator==(const SeedTag&, const SeedTag&) = default;
};

// Two mixing rounds per field; plain concatenation would correlate
// neighbouring counters.
inline std::uint64_t derive_seed(const SeedTag& tag) {
  std::uint64_t s = tag.base;
  std::uint64_t x = splitmix64(s);
  s ^= x + 0x510e527fade682d1ULL + tag.stream;
  x = splitmix64(s);
  s ^= x + 0x9b05688c2b3e6c1fULL + tag.index;
  return splitmix64(s);
}

inline std::mt19937_64 make_engine(const SeedTag& tag) {
  return std::mt19937_64(derive_seed(tag));
}

// Uniform in [0, 1). Explicit bit construction: identical output for any
// conforming mt19937_64, independent of the standard library's distributions.
inline double uniform01(std::mt19937_64& eng) {
  return static_cast<double>(eng() >> 11) * 0x1.0p-53;
}

// Uniform in [-1, 1).
inline double uniform_pm1(std::mt19937_64& eng) { return 2.0 * uniform01(eng) - 1.0; }

// Fair +-1.
inline double rademacher(std::mt19937_64& eng) { return (eng() & 1ULL) ? 1.0 : -1.0; }

}  // namespace tailforge
