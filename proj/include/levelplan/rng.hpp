#pragma once

#include <cstdint>
#include <random>

namespace levelplan {

// SplitMix64 finalizer. Per-iteration fuzz seeds are mix64(seed ^ iteration).
constexpr std::uint64_t mix64(std::uint64_t x) noexcept {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

// std::mt19937_64's output sequence is fixed by the standard; the standard
// distributions are not, so the helpers below stand in for them.
using Rng = std::mt19937_64;

inline std::uint64_t uniform_below(Rng& rng, std::uint64_t bound) {
  return bound == 0 ? 0 : rng() % bound;
}

inline int uniform_int(Rng& rng, int lo, int hi) {
  return lo + static_cast<int>(uniform_below(rng, static_cast<std::uint64_t>(hi - lo) + 1));
}

inline double uniform_unit(Rng& rng) {
  return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

inline bool coin(Rng& rng) { return (rng() >> 63) != 0; }

template <class Range>
void shuffle(Rng& rng, Range& range) {
  for (auto i = range.size(); i > 1; --i) {
    const auto j = uniform_below(rng, i);
    std::swap(range[i - 1], range[j]);
  }
}

}  // namespace levelplan
