#pragma once

#include <cstdint>
#include <string_view>

namespace epw {

// splitmix64: tiny, seedable, and fully reproducible across platforms.
// Every randomized routine takes one of these explicitly; nothing in the
// library touches global RNG state.
struct SplitMix64 {
  uint64_t state = 0;

  SplitMix64() = default;
  explicit SplitMix64(uint64_t seed) : state(seed) {}

  uint64_t next() {
    uint64_t z = (state += 0x9e3779b97f4a7c15ull);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
    return z ^ (z >> 31);
  }

  // Inclusive range. Ranges here are tiny (like [-10,10]); modulo bias over
  // a 64-bit draw is far below anything observable.
  int64_t uniform_int(int64_t lo, int64_t hi) {
    uint64_t span = static_cast<uint64_t>(hi - lo) + 1;
    return lo + static_cast<int64_t>(next() % span);
  }
};

// FNV-1a, doubling as the content digest for run manifests.
inline uint64_t fnv1a64(std::string_view data) {
  uint64_t h = 0xcbf29ce484222325ull;
  for (unsigned char c : data) {
    h ^= c;
    h *= 0x100000001b3ull;
  }
  return h;
}

// Deterministic sub-stream: same root seed + same label => same stream,
// distinct labels => unrelated streams.
inline SplitMix64 sub_rng(uint64_t root_seed, std::string_view label) {
  SplitMix64 mix(root_seed ^ fnv1a64(label));
  mix.next();
  return mix;
}

}  // namespace epw
