#pragma once

#include <cstdint>

#include "forestcount/errors.hpp"

namespace forestcount {

/// SplitMix64 (Steele, Lea, Flood 2014). 64-bit state, one multiply-xorshift
/// finalizer per draw. Chosen because it is trivially reimplementable in any
/// language, so seeded outputs (random graphs, identity trials) reproduce
/// bit-for-bit elsewhere.
///
/// Derived draws:
///  - nextUnit(): (next() >> 11) * 2^-53, uniform on [0, 1).
///  - uniformInt(lo, hi): rejection sampling on next() to remove modulo bias;
///    a draw r is accepted when r >= (2^64 mod span), then lo + r % span.
class SplitMix64 {
 public:
  explicit constexpr SplitMix64(std::uint64_t seed) noexcept : state_(seed) {}

  constexpr std::uint64_t next() noexcept {
    state_ += 0x9E3779B97F4A7C15ULL;
    std::uint64_t z = state_;
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
  }

  constexpr double nextUnit() noexcept {
    return static_cast<double>(next() >> 11) * 0x1.0p-53;
  }

  std::int64_t uniformInt(std::int64_t lo, std::int64_t hi) {
    if (hi < lo) throw InputError("uniformInt: empty range");
    const std::uint64_t span =
        static_cast<std::uint64_t>(hi) - static_cast<std::uint64_t>(lo) + 1;
    if (span == 0) return static_cast<std::int64_t>(next());  // full 64-bit range
    const std::uint64_t reject = (0 - span) % span;  // 2^64 mod span
    std::uint64_t r = next();
    while (r < reject) r = next();
    return lo + static_cast<std::int64_t>(r % span);
  }

  constexpr std::uint64_t state() const noexcept { return state_; }

 private:
  std::uint64_t state_;
};

}  // namespace forestcount
