#pragma once

#include <cstdint>

namespace parsim {

// Named deterministic generator: splitmix64. Chosen because it is trivially
// seedable, splittable (child streams do not overlap the parent in practice
// thanks to the 64-bit golden-ratio increment and avalanche finalizer), and
// bit-identical across platforms — corpus generation must reproduce exactly
// from a seed. The increment/finalizer constants are the reference ones.
class SplitMix64 {
public:
  explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next() {
    std::uint64_t z = (state_ += 0x9E3779B97F4A7C15ULL);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
  }

  // Uniform-enough value in [0, n). Uses a plain modulo: the tiny bias is
  // irrelevant for corpus generation, determinism is what matters.
  std::uint64_t next_below(std::uint64_t n) { return next() % n; }

  // Uniform double in [0, 1) with 53 random bits.
  double next_double() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

  // Child generator whose stream is independent of the parent's subsequent
  // output: used to give each corpus case its own stream.
  SplitMix64 split() { return SplitMix64(next() ^ 0x9E3779B97F4A7C15ULL); }

private:
  std::uint64_t state_;
};

// FNV-1a 64-bit content hash; used for source digests in sidecar manifests.
inline std::uint64_t fnv1a64(const char* data, std::size_t len) {
  std::uint64_t h = 0xCBF29CE484222325ULL;
  for (std::size_t i = 0; i < len; ++i) {
    h ^= static_cast<unsigned char>(data[i]);
    h *= 0x100000001B3ULL;
  }
  return h;
}

} // namespace parsim
