#pragma once

#include <cstddef>
#include <cstdint>
#include <random>
#include <span>

namespace ionshelf {

/// splitmix64 finalizer; used to whiten seeds and derive independent streams.
constexpr std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

/// Deterministic per-task seed: independent tasks (runs, chains, trajectories)
/// draw from streams keyed by (master, stream tag, task index).
constexpr std::uint64_t derive_seed(std::uint64_t master, std::uint64_t stream,
                                    std::uint64_t index = 0) {
  return splitmix64(splitmix64(splitmix64(master) ^ stream) ^ index);
}

/// Uniform double in [0, 1) from the top 53 bits of one mt19937_64 draw.
/// Unlike std::uniform_real_distribution this is identical across standard
/// library implementations, which the reproducibility contract relies on.
inline double uniform01(std::mt19937_64& rng) {
  return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

inline double uniform_in(std::mt19937_64& rng, double lo, double hi) {
  return lo + (hi - lo) * uniform01(rng);
}

/// Inversion sampling against a cumulative weight table (last entry = total).
/// Returns the smallest index whose cumulative weight exceeds u * total.
inline std::size_t sample_cumulative(std::span<const double> cumulative, double u) {
  const double target = u * cumulative.back();
  std::size_t lo = 0, hi = cumulative.size() - 1;
  while (lo < hi) {
    const std::size_t mid = (lo + hi) / 2;
    if (cumulative[mid] <= target) {
      lo = mid + 1;
    } else {
      hi = mid;
    }
  }
  return lo;
}

}  // namespace ionshelf
