#include "switchopt/rng.hpp"

namespace switchopt {

namespace {

constexpr std::uint64_t rotl(std::uint64_t x, int k) noexcept {
  return (x << k) | (x >> (64 - k));
}

struct Wide {
  std::uint64_t hi;
  std::uint64_t lo;
};

// Full 64x64 -> 128-bit product from 32-bit limbs.
constexpr Wide multiply(std::uint64_t a, std::uint64_t b) noexcept {
  const std::uint64_t a_lo = a & 0xFFFFFFFFULL, a_hi = a >> 32;
  const std::uint64_t b_lo = b & 0xFFFFFFFFULL, b_hi = b >> 32;
  const std::uint64_t ll = a_lo * b_lo;
  const std::uint64_t lh = a_lo * b_hi;
  const std::uint64_t hl = a_hi * b_lo;
  const std::uint64_t hh = a_hi * b_hi;
  const std::uint64_t mid = (ll >> 32) + (lh & 0xFFFFFFFFULL) + (hl & 0xFFFFFFFFULL);
  return {hh + (lh >> 32) + (hl >> 32) + (mid >> 32), (mid << 32) | (ll & 0xFFFFFFFFULL)};
}

static_assert(multiply(0xFFFFFFFFFFFFFFFFULL, 0xFFFFFFFFFFFFFFFEULL).hi == 0xFFFFFFFFFFFFFFFDULL);
static_assert(multiply(0xFFFFFFFFFFFFFFFFULL, 0xFFFFFFFFFFFFFFFEULL).lo == 2);

}  // namespace

RngStream::RngStream(std::uint64_t seed) noexcept : seed_(seed) {
  std::uint64_t sm = seed;
  for (auto& word : state_) {
    sm += 0x9E3779B97F4A7C15ULL;
    word = splitmix64_mix(sm);
  }
}

std::uint64_t RngStream::next() noexcept {
  const std::uint64_t result = rotl(state_[1] * 5, 7) * 9;
  const std::uint64_t t = state_[1] << 17;
  state_[2] ^= state_[0];
  state_[3] ^= state_[1];
  state_[1] ^= state_[2];
  state_[0] ^= state_[3];
  state_[2] ^= t;
  state_[3] = rotl(state_[3], 45);
  return result;
}

// Draw from [0, range). range == 0 stands for the full 2^64 range.
std::uint64_t RngStream::bounded(std::uint64_t range) noexcept {
  if (range == 0) return next();
  Wide m = multiply(next(), range);
  if (m.lo < range) {
    const std::uint64_t threshold = (0 - range) % range;
    while (m.lo < threshold) m = multiply(next(), range);
  }
  return m.hi;
}

std::int64_t RngStream::uniform_int(std::int64_t lo, std::int64_t hi) noexcept {
  const std::uint64_t span = static_cast<std::uint64_t>(hi) - static_cast<std::uint64_t>(lo) + 1;
  return static_cast<std::int64_t>(static_cast<std::uint64_t>(lo) + bounded(span));
}

double RngStream::uniform01() noexcept {
  return static_cast<double>(next() >> 11) * 0x1.0p-53;
}

}  // namespace switchopt
