#pragma once

#include <cstdint>

namespace spdc {

/// SplitMix64 output finalizer (Steele, Lea, Flood 2014).
constexpr std::uint64_t mix64(std::uint64_t z) {
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
  return z ^ (z >> 31);
}

/// Counter-based stream: the n-th draw of stream `stream` under `seed` is a
/// pure function of (seed, stream, n). Streams are handed out per event, so
/// results do not depend on how events are distributed over threads.
class CounterRng {
public:
  static constexpr std::uint64_t kGolden = 0x9e3779b97f4a7c15ull;

  CounterRng(std::uint64_t seed, std::uint64_t stream)
      : key_(mix64(mix64(seed + kGolden) ^ (stream * 0xd1b54a32d192ed03ull + kGolden))) {}

  std::uint64_t next() { return mix64(key_ + (++counter_) * kGolden); }

  /// Uniform on [0, 1) with 53 random bits.
  double uniform() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

  /// Standard normal deviate (Box-Muller, one value per two uniforms).
  double normal();

  std::uint64_t counter() const { return counter_; }

private:
  std::uint64_t key_;
  std::uint64_t counter_{0};
};

} // namespace spdc
