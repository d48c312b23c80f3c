#pragma once

#include <cstdint>
#include <string_view>

namespace linksim {

inline constexpr std::string_view kRngIdentity =
    "splitmix64 keyed by (seed, run_index, stream); uniform = top 53 bits * 2^-53";

inline constexpr std::uint64_t splitmix64_mix(std::uint64_t z) {
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

/// Independent SplitMix64 stream for one (seed, run, stream) key. The same key
/// always yields the same sequence, so runs can be generated in any order.
class StreamRng {
 public:
  StreamRng(std::uint64_t seed, std::uint64_t run_index, std::uint64_t stream)
      : state_(splitmix64_mix(splitmix64_mix(splitmix64_mix(seed) ^ run_index) ^ stream)) {}

  std::uint64_t next() {
    state_ += 0x9E3779B97F4A7C15ULL;
    return splitmix64_mix(state_);
  }

  /// Uniform on [0, 1).
  double uniform01() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform01(); }

 private:
  std::uint64_t state_;
};

}  // namespace linksim
