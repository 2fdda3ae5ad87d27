#pragma once

// SplitMix64: tiny, fast, and fully specified, so streams are identical on
// every platform. Not cryptographic; only used to generate test cases.
// <random> distributions are avoided on purpose: their output is
// implementation-defined and would break byte-identical reports.

#include <cstdint>

namespace germlab {

inline constexpr std::uint64_t kGolden = 0x9E3779B97F4A7C15ull;

class SplitMix64 {
 public:
  explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next() {
    std::uint64_t z = (state_ += kGolden);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
    return z ^ (z >> 31);
  }

  // Uniform-enough in [0, bound); modulo bias is irrelevant for tiny bounds.
  std::uint64_t below(std::uint64_t bound) { return next() % bound; }

  long long in_range(long long lo, long long hi) {  // inclusive
    return lo + static_cast<long long>(below(static_cast<std::uint64_t>(hi - lo + 1)));
  }

 private:
  std::uint64_t state_;
};

}  // namespace germlab
