#pragma once

#include <cstdint>
#include <random>
#include <vector>

namespace semqa::detail {

// Unbiased index draw via rejection sampling. std::uniform_int_distribution
// is implementation-defined, which would break byte-identical outputs across
// standard libraries, so seeded draws go through this instead.
inline std::uint64_t uniform_index(std::mt19937_64& rng, std::uint64_t n) {
  const std::uint64_t limit = n == 0 ? 0 : UINT64_MAX - UINT64_MAX % n;
  std::uint64_t x = rng();
  while (x >= limit) x = rng();
  return x % n;
}

template <typename T>
void fisher_yates_shuffle(std::vector<T>& items, std::mt19937_64& rng) {
  for (std::size_t i = items.size(); i > 1; --i) {
    const std::uint64_t j = uniform_index(rng, i);
    std::swap(items[i - 1], items[j]);
  }
}

}  // namespace semqa::detail
