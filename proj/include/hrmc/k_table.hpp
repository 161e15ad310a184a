#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "hrmc/checker.hpp"
#include "hrmc/constructions.hpp"

namespace hrmc {

/// How a K(a, n) row is supported.
enum ProvenFlag : unsigned {
  kByConstruction = 1U,     // checker-certified instance (upper bound)
  kByExhaustiveSearch = 2U, // labeled-graph search, bounded k
  kByPaperCitation = 4U,    // published argument, not re-derived here
  kByPaletteBound = 8U,     // k <= a is impossible (lower bound k >= a+1)
};

std::string describe_provenance(unsigned flags);

struct KEntry {
  enum class Kind { Finite, Infinite, Unknown };

  std::size_t attackers = 0;
  std::size_t n_min = 0;
  std::optional<std::size_t> n_max;  // nullopt: every n >= n_min
  Kind kind = Kind::Unknown;
  std::size_t value = 0;  // Finite only
  unsigned proven_by = 0;
  std::string note;
  /// Construction rows: the certified instance (n = n_min).
  std::optional<ColoredInstance> certificate;
  /// Infinite rows backed by search: largest n and k actually searched.
  std::optional<std::size_t> searched_up_to_n;
  std::optional<std::size_t> searched_k_max;

  bool covers(std::size_t n) const { return n >= n_min && (!n_max || n <= *n_max); }
  std::string range() const;
  std::string value_string() const;
};

struct KTableOptions {
  /// Exhaustive labeled-graph search covers n in [a, search_n_max].
  std::size_t search_n_max = 4;
  /// Colors tried per graph: a+1 .. a+extra_colors.
  std::size_t extra_colors = 3;
  std::uint64_t budget = 1'000'000;
  /// Re-run check_highly on every construction row.
  bool certify = true;
  ExecutionPolicy policy{};
};

/// K(a, n) rows for a = 1..max_a. Requires max_a <= 4.
///
/// Throws std::logic_error if a certificate fails its check or a bounded
/// search contradicts an infinite row, since either would mean the table is
/// wrong.
std::vector<KEntry> k_table(std::size_t max_a, const KTableOptions& options = {});

/// Row covering (a, n), if any.
const KEntry* find_entry(const std::vector<KEntry>& table, std::size_t a, std::size_t n);

}  // namespace hrmc
