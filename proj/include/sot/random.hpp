#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <random>

namespace sot {

using Rng = std::mt19937_64;

inline constexpr std::uint64_t kDefaultSeed = 20200417;

/// Integer components in [-9, 9], the sampling range of every random sweep.
template <std::size_t N = 8>
std::array<int, N> random_components(Rng& rng) {
  std::uniform_int_distribution<int> dist(-9, 9);
  std::array<int, N> out{};
  for (auto& v : out) v = dist(rng);
  return out;
}

}  // namespace sot
