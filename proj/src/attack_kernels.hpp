#pragma once

// Attack-set scanning kernels shared by the checker.
//
// An attack set is a sorted tuple of `a` vertex indices; attack sets are
// ranked in ascending lexicographic order. Every scan reports the smallest
// failing rank per condition, so the serial and parallel paths agree exactly.

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "hrmc/coloring.hpp"
#include "hrmc/graph.hpp"

namespace hrmc::detail {

struct PreparedInstance {
  PreparedInstance(const Graph& g, const Multicoloring& kappa, std::size_t attackers);

  std::size_t num_vertices;
  std::size_t width;  // 64-bit blocks per vertex mask
  std::size_t attackers;
  std::vector<Word> closed;  // M(v) for every v, `width` blocks each
  std::vector<Word> all;     // mask of [0, n)
  std::vector<ColorMask> colors;
  ColorMask full;

  std::span<const Word> closed_of(std::size_t v) const { return {closed.data() + v * width, width}; }
};

enum Condition : unsigned {
  kHrCondition = 1U,
  kResistanceCondition = 2U,
  kBothConditions = kHrCondition | kResistanceCondition,
};

struct ScanResult {
  std::optional<std::uint64_t> hr_fail_rank;
  std::optional<std::uint64_t> resistance_fail_rank;
};

/// Reference path: one thread, ranks [begin, end).
ScanResult scan_serial(const PreparedInstance& p, unsigned conditions, std::uint64_t begin,
                       std::uint64_t end);

/// OpenMP path over all C(n, a) ranks; identical output to scan_serial.
ScanResult scan_parallel(const PreparedInstance& p, unsigned conditions, int threads);

bool covers_palette(const PreparedInstance& p, std::span<const std::size_t> attack);
bool leaves_full_component(const PreparedInstance& p, std::span<const std::size_t> attack);

/// Uniform a-subset of [0, n) for sampling trial `trial` (Floyd's method),
/// returned sorted.
std::vector<std::size_t> sample_attack(std::size_t n, std::size_t a, std::uint64_t seed,
                                       std::uint64_t trial);

}  // namespace hrmc::detail
