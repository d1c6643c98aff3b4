#pragma once

#include <array>
#include <cstddef>
#include <cstdint>

namespace switchopt {

/// SplitMix64 output function. A bijection on 64-bit words; used for seeding
/// and for deriving per-run child seeds.
constexpr std::uint64_t splitmix64_mix(std::uint64_t z) noexcept {
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

/// Child seed for run `index` of a batch seeded with `parent`.
///
/// For a fixed parent the map index -> child is injective (composition of
/// bijections), so the runs of one batch never share a stream.
constexpr std::uint64_t derive_seed(std::uint64_t parent, std::uint64_t index) noexcept {
  return splitmix64_mix(parent ^ splitmix64_mix(index + 0x9E3779B97F4A7C15ULL));
}

/// Deterministic random stream: xoshiro256** seeded through SplitMix64.
///
/// All draws are defined in terms of 64-bit integer arithmetic only, so a
/// given seed produces the same sequence on every platform and compiler.
/// Integer draws use Lemire's multiply-and-reject method (unbiased).
/// Real draws take the top 53 bits of one output.
class RngStream {
 public:
  explicit RngStream(std::uint64_t seed) noexcept;

  /// Stream for run `index` of the batch seeded with `parent`.
  static RngStream derive(std::uint64_t parent, std::uint64_t index) noexcept {
    return RngStream(derive_seed(parent, index));
  }

  std::uint64_t seed() const noexcept { return seed_; }

  /// Raw 64-bit output.
  std::uint64_t next() noexcept;

  /// Uniform integer in [lo, hi] inclusive. Requires lo <= hi.
  std::int64_t uniform_int(std::int64_t lo, std::int64_t hi) noexcept;

  /// Uniform index in [0, n). Requires n >= 1.
  std::size_t index(std::size_t n) noexcept {
    return static_cast<std::size_t>(uniform_int(0, static_cast<std::int64_t>(n) - 1));
  }

  /// Uniform real in [0, 1).
  double uniform01() noexcept;

  /// True with probability p (one draw is consumed regardless of p).
  bool bernoulli(double p) noexcept { return uniform01() < p; }

 private:
  std::uint64_t bounded(std::uint64_t range) noexcept;

  std::uint64_t seed_;
  std::array<std::uint64_t, 4> state_{};
};

}  // namespace switchopt
