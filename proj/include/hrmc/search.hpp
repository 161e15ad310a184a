#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "hrmc/checker.hpp"
#include "hrmc/coloring.hpp"
#include "hrmc/constructions.hpp"
#include "hrmc/graph.hpp"

namespace hrmc {

/// Color classes are enumerated as n-bit masks, so the search is limited to
/// small graphs.
inline constexpr std::size_t kMaxSearchVertices = 20;
/// Labeled-graph enumeration covers 2^C(n,2) graphs.
inline constexpr std::size_t kMaxNonexistenceVertices = 6;

enum class Outcome { Sat, Unsat, Unknown };

std::string to_string(Outcome outcome);

struct Decision {
  Outcome outcome = Outcome::Unknown;
  std::optional<Multicoloring> witness;  // Sat only
  std::uint64_t nodes_expanded = 0;
  std::uint64_t budget = 0;
  std::size_t attackers = 0;
  std::size_t palette_size = 0;
  /// Settled by the k <= a argument without searching.
  bool fast_path = false;
};

/// Does `g` admit a highly a-resistant k-multicoloring?
///
/// Colorings are enumerated as nondecreasing sequences of k color classes,
/// which visits one representative per color permutation orbit. A branch is
/// cut as soon as some attack set has no component of G \ M(A) meeting every
/// class chosen so far; the HR condition is checked on complete colorings.
/// The root and every accepted class choice count as one expanded node; the
/// search answers Unknown rather than expand more than `budget` nodes.
///
/// k <= a is answered Unsat immediately: resistance forces every color onto
/// some vertex, and then at most k <= a vertices cover the palette.
Decision decide(const Graph& g, std::size_t a, std::size_t k, std::uint64_t budget);

struct MinColorsResult {
  enum class Status { Found, None, Unknown };
  Status status = Status::None;
  std::optional<std::size_t> colors;
  std::vector<Decision> trail;
};

/// Smallest k in [a+1, k_max] for which decide() answers Sat. Stops with
/// Unknown at the first undecided k.
MinColorsResult min_colors(const Graph& g, std::size_t a, std::size_t k_max, std::uint64_t budget);

/// The labeled graph on n vertices whose edge set is given by `edge_mask`;
/// bit i selects the i-th pair (u, v), u < v, in lexicographic order.
Graph labeled_graph(std::size_t n, std::uint64_t edge_mask);

struct GraphVerdict {
  std::uint64_t edge_mask = 0;
  Outcome outcome = Outcome::Unsat;
  std::optional<std::size_t> first_sat_colors;
  std::uint64_t nodes_expanded = 0;
};

struct NonexistenceSummary {
  enum class Aggregate { AllUnsat, FoundSat, Unknown };

  std::size_t num_vertices = 0;
  std::size_t attackers = 0;
  std::size_t k_max = 0;
  /// Node budget granted to each (graph, k) decide() call.
  std::uint64_t budget_per_decision = 0;
  Aggregate aggregate = Aggregate::AllUnsat;
  /// Lowest edge mask with a Sat answer, with its witness coloring.
  std::optional<ColoredInstance> found;
  std::vector<GraphVerdict> graphs;
};

std::string to_string(NonexistenceSummary::Aggregate aggregate);

/// Runs decide() for every labeled graph on n vertices and every k in
/// [a+1, k_max]. Requires n <= kMaxNonexistenceVertices, 1 <= a <= n and
/// k_max >= a+1.
NonexistenceSummary exhaustive_nonexistence(std::size_t n, std::size_t a, std::size_t k_max,
                                            std::uint64_t budget, const ExecutionPolicy& policy = {});

/// Every nondecreasing sequence of k class masks over n vertices, in the
/// order the search visits them (no pruning). Intended for small n and k.
std::vector<std::vector<std::uint64_t>> canonical_class_sequences(std::size_t n, std::size_t k);

}  // namespace hrmc
