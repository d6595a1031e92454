#pragma once

#include <cstdint>

namespace gamma2 {

/// Counter-based generator: every draw is a pure function of
/// (seed, stream, index), so sampling is reproducible across platforms and
/// trivially partitioned between threads. The mixer is SplitMix64's finalizer.
class CounterRng {
 public:
  explicit constexpr CounterRng(std::uint64_t seed) noexcept : seed_(seed) {}

  static constexpr std::uint64_t mix(std::uint64_t x) noexcept {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
  }

  constexpr std::uint64_t bits(std::uint64_t stream, std::uint64_t index) const noexcept {
    return mix(mix(mix(seed_) ^ stream) ^ index);
  }

  /// Uniform on [0, 1) with 53 random bits.
  constexpr double uniform(std::uint64_t stream, std::uint64_t index) const noexcept {
    return static_cast<double>(bits(stream, index) >> 11) * 0x1.0p-53;
  }

  constexpr double uniform(std::uint64_t stream, std::uint64_t index, double lo,
                           double hi) const noexcept {
    return lo + (hi - lo) * uniform(stream, index);
  }

  /// Child generator with an independent key.
  constexpr CounterRng split(std::uint64_t key) const noexcept {
    return CounterRng(mix(seed_ ^ mix(key + 0x632be59bd9b4e019ULL)));
  }

  constexpr std::uint64_t seed() const noexcept { return seed_; }

 private:
  std::uint64_t seed_;
};

}  // namespace gamma2
