#pragma once

#include <cstddef>
#include <cstdint>
#include <limits>
#include <span>
#include <stdexcept>
#include <vector>

namespace hrmc {

__extension__ using Wide = unsigned __int128;

/// C(n, r); throws std::overflow_error past 2^64.
inline std::uint64_t binomial(std::uint64_t n, std::uint64_t r) {
  if (r > n) return 0;
  if (r > n - r) r = n - r;
  Wide acc = 1;
  for (std::uint64_t i = 1; i <= r; ++i) {
    acc = acc * (n - r + i) / i;
    if (acc > std::numeric_limits<std::uint64_t>::max()) throw std::overflow_error("binomial overflow");
  }
  return static_cast<std::uint64_t>(acc);
}

/// Writes the combination of rank `rank` (ascending lexicographic order of
/// sorted index tuples) of `out.size()` elements drawn from [0, n).
inline void unrank_combination(std::uint64_t rank, std::size_t n, std::span<std::size_t> out) {
  const std::size_t r = out.size();
  std::size_t x = 0;
  for (std::size_t i = 0; i < r; ++i) {
    for (;; ++x) {
      const std::uint64_t below = binomial(n - 1 - x, r - 1 - i);
      if (rank < below) break;
      rank -= below;
    }
    out[i] = x++;
  }
}

/// Advances to the lexicographic successor; false after the last one.
inline bool next_combination(std::span<std::size_t> c, std::size_t n) {
  const std::size_t r = c.size();
  std::size_t i = r;
  while (i > 0) {
    --i;
    if (c[i] < n - r + i) {
      ++c[i];
      for (std::size_t j = i + 1; j < r; ++j) c[j] = c[j - 1] + 1;
      return true;
    }
  }
  return false;
}

}  // namespace hrmc
