#pragma once

#include <cstdint>

namespace linkpred::rng {

/// SplitMix64 finalizer.
constexpr std::uint64_t mix64(std::uint64_t x) {
  x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ull;
  x = (x ^ (x >> 27)) * 0x94D049BB133111EBull;
  return x ^ (x >> 31);
}

/// Value i of the counter-based stream identified by `seed`. Random access,
/// so consumers can partition draws by index and stay independent of the
/// worker count.
constexpr std::uint64_t stream_at(std::uint64_t seed, std::uint64_t i) {
  return mix64(seed + (i + 1) * 0x9E3779B97F4A7C15ull);
}

/// Unbiased draw from [0, n): multiply-shift with rejection (Lemire).
/// `next` supplies full 64-bit words.
template <class G>
std::uint64_t bounded(G&& next, std::uint64_t n) {
  std::uint64_t x = next();
  unsigned __int128 m = static_cast<unsigned __int128>(x) * n;
  auto lo = static_cast<std::uint64_t>(m);
  if (lo < n) {
    const std::uint64_t t = (0 - n) % n;
    while (lo < t) {
      x = next();
      m = static_cast<unsigned __int128>(x) * n;
      lo = static_cast<std::uint64_t>(m);
    }
  }
  return static_cast<std::uint64_t>(m >> 64);
}

/// Maps a 64-bit word to [0, n) by multiply-shift. The O(n / 2^64) bias is
/// irrelevant for sampling estimators; use bounded() where exactness matters.
constexpr std::uint64_t map_to_range(std::uint64_t x, std::uint64_t n) {
  return static_cast<std::uint64_t>(
      (static_cast<unsigned __int128>(x) * n) >> 64);
}

/// Uniform double in [0, 1) from the top 53 bits.
constexpr double to_unit(std::uint64_t x) {
  return static_cast<double>(x >> 11) * 0x1.0p-53;
}

}  // namespace linkpred::rng
