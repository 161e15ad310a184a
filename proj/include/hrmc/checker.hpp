#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>

#include "hrmc/coloring.hpp"
#include "hrmc/graph.hpp"
#include "hrmc/vertex_set.hpp"

namespace hrmc {

/// Thread count for the parallel kernels. 0 selects omp_get_max_threads().
/// Results never depend on this value.
struct ExecutionPolicy {
  int threads = 0;

  static ExecutionPolicy serial() { return {1}; }
};

int resolve_threads(const ExecutionPolicy& policy);

/// Verdict for one condition; `witness` is set exactly when the condition
/// fails and holds the lexicographically first failing attack set.
struct ConditionResult {
  bool holds = true;
  std::optional<VertexSet> witness;
};

struct CheckReport {
  std::size_t num_vertices = 0;
  std::size_t palette_size = 0;
  std::size_t attackers = 0;
  bool hr_holds = true;
  std::optional<VertexSet> hr_witness;
  bool resistant = true;
  std::optional<VertexSet> resistance_witness;
  bool highly_resistant = true;
  /// Attack sets in lexicographic order up to the point where both verdicts
  /// are settled: C(n, a) unless both conditions fail, in which case one past
  /// the later witness rank.
  std::uint64_t attack_sets_examined = 0;

  friend bool operator==(const CheckReport&, const CheckReport&) = default;
};

struct SampleReport {
  std::uint64_t trials = 0;
  std::uint64_t seed = 0;
  std::size_t attackers = 0;
  std::uint64_t hr_failures = 0;
  std::uint64_t resistance_failures = 0;
  /// Attack sets drawn by the lowest-numbered failing trials.
  std::optional<VertexSet> first_hr_failure;
  std::optional<VertexSet> first_resistance_failure;

  friend bool operator==(const SampleReport&, const SampleReport&) = default;
};

/// a-HR: no set of exactly `a` vertices carries every color.
///
/// Requires 1 <= a <= n, kappa.size() == n and a palette of at least one
/// color; otherwise throws std::invalid_argument.
ConditionResult check_hr(const Graph& g, const Multicoloring& kappa, std::size_t a,
                         const ExecutionPolicy& policy = {});

/// a-resistance: for every set A of `a` vertices some component of
/// G \ M(A) carries every color.
ConditionResult check_resistant(const Graph& g, const Multicoloring& kappa, std::size_t a,
                                const ExecutionPolicy& policy = {});

/// Both conditions in a single pass over the attack sets.
CheckReport check_highly(const Graph& g, const Multicoloring& kappa, std::size_t a,
                         const ExecutionPolicy& policy = {});

/// True when a_hr-HR fails or kappa is not r-resistant.
bool lemma_disjunction(const Graph& g, const Multicoloring& kappa, std::size_t a_hr, std::size_t r,
                       const ExecutionPolicy& policy = {});

/// Monte Carlo variant for instances where C(n, a) is too large to
/// enumerate. Trial t draws a uniform a-subset from Rng(seed, t).
SampleReport sample_check(const Graph& g, const Multicoloring& kappa, std::size_t a,
                          std::uint64_t trials, std::uint64_t seed, const ExecutionPolicy& policy = {});

/// Replay of a single attack against the HR condition: true if the union of
/// colors on `attack` is the whole palette.
bool attack_covers_palette(const Multicoloring& kappa, const VertexSet& attack);

/// Replay of a single attack against resistance: true if some component of
/// G \ M(attack) carries every color.
bool attack_leaves_full_component(const Graph& g, const Multicoloring& kappa, const VertexSet& attack);

}  // namespace hrmc
