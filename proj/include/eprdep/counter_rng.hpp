#pragma once

#include <cstdint>

namespace eprdep {

/// Counter-based generator: the value at position `counter` is the
/// splitmix64 output after `counter + 1` increments of the key. Any
/// position can be evaluated independently, so draws do not depend on
/// evaluation order or thread count.
class CounterRng {
 public:
  static constexpr const char* kName = "splitmix64-counter";

  constexpr CounterRng(std::uint64_t seed, std::uint64_t stream = 0) noexcept
      : key_(mix(seed ^ mix(stream + kGamma))) {}

  constexpr std::uint64_t bits(std::uint64_t counter) const noexcept {
    return mix(key_ + (counter + 1) * kGamma);
  }

  /// Uniform double in [0, 1) with 53 random bits.
  constexpr double uniform(std::uint64_t counter) const noexcept {
    return static_cast<double>(bits(counter) >> 11) * 0x1.0p-53;
  }

 private:
  static constexpr std::uint64_t kGamma = 0x9E3779B97F4A7C15ULL;

  static constexpr std::uint64_t mix(std::uint64_t z) noexcept {
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
  }

  std::uint64_t key_;
};

}  // namespace eprdep
