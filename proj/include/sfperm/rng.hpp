#pragma once

#include <cstdint>
#include <limits>

namespace sfperm {

/// Purpose of a random draw; part of the stream key so that different draws
/// within one trial never share bits.
enum class DrawTag : std::uint64_t {
  kSymbol = 0x53594d,
  kFading = 0x464144,
  kNoise = 0x4e4f49,
  kTest = 0x545354,
};

/// Counter-based generator: output i is a SplitMix64 finaliser applied to
/// key + (i+1)*golden. A stream is fully determined by
/// (master_seed, point, trial, tag), so a trial draws the same numbers no
/// matter which worker runs it. Satisfies UniformRandomBitGenerator.
class RngStream {
 public:
  using result_type = std::uint64_t;

  RngStream(std::uint64_t master_seed, std::uint64_t point, std::uint64_t trial, DrawTag tag)
      : key_(derive_key(master_seed, point, trial, static_cast<std::uint64_t>(tag))) {}

  static constexpr result_type min() { return 0; }
  static constexpr result_type max() { return std::numeric_limits<result_type>::max(); }

  result_type operator()() { return mix(key_ + (++counter_) * kGolden); }

  /// Uniform on [0, 1) with 53 random bits.
  double uniform01() { return static_cast<double>((*this)() >> 11) * 0x1.0p-53; }

  std::uint64_t counter() const { return counter_; }

 private:
  static constexpr std::uint64_t kGolden = 0x9e3779b97f4a7c15ULL;

  static constexpr std::uint64_t mix(std::uint64_t z) {
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

  static constexpr std::uint64_t derive_key(std::uint64_t seed, std::uint64_t point,
                                            std::uint64_t trial, std::uint64_t tag) {
    std::uint64_t k = mix(seed + kGolden);
    k = mix(k ^ (point + 0x632be59bd9b4e019ULL));
    k = mix(k ^ (trial + 0x85157af5ULL * kGolden));
    k = mix(k ^ tag);
    return k;
  }

  std::uint64_t key_;
  std::uint64_t counter_ = 0;
};

}  // namespace sfperm
