#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "hrmc/checker.hpp"
#include "hrmc/constructions.hpp"

namespace hrmc {

/// The instances a lemma quantifies over, and the disjunction it asserts:
/// either a_hr-HR fails or the coloring is not r-resistant.
struct LemmaScope {
  int id = 0;
  std::size_t min_vertices = 0;
  std::size_t max_vertices = 0;
  /// Scope is exactly the cycle on this many vertices.
  std::optional<std::size_t> fixed_cycle;
  /// Scope excludes the cycle on this many vertices.
  std::optional<std::size_t> excluded_cycle;
  std::size_t k_min = 1;
  std::size_t k_max = 1;
  std::size_t a_hr = 0;
  std::size_t r = 0;
  std::string description;
};

const std::vector<int>& lemma_ids();
std::optional<LemmaScope> lemma_scope(int id);

/// Random member of the scope for trial `trial`.
///
/// Graph order is uniform in [min_vertices, max_vertices], each possible edge
/// is present with probability 1/2, and the excluded cycle is rejected and
/// redrawn. The palette size is uniform in [k_min, k_max]. Each
/// (vertex, color) membership is independent with probability 1/2, except
/// in one trial out of ten (on average) where it is 1/4 or 3/4.
ColoredInstance sample_lemma_instance(const LemmaScope& scope, std::uint64_t seed, std::uint64_t trial);

struct LemmaReport {
  int id = 0;
  std::uint64_t trials = 0;
  std::uint64_t seed = 0;
  /// Trials settled by a failing HR condition.
  std::uint64_t hr_failed = 0;
  /// Trials where HR held and resistance failed.
  std::uint64_t not_resistant = 0;
  std::uint64_t violations = 0;
  std::optional<std::uint64_t> first_violation_trial;
  std::optional<ColoredInstance> counterexample;

  friend bool operator==(const LemmaReport& lhs, const LemmaReport& rhs) {
    return lhs.id == rhs.id && lhs.trials == rhs.trials && lhs.seed == rhs.seed && lhs.hr_failed == rhs.hr_failed &&
           lhs.not_resistant == rhs.not_resistant && lhs.violations == rhs.violations &&
           lhs.first_violation_trial == rhs.first_violation_trial;
  }
};

/// Samples `trials` instances and evaluates lemma_disjunction on each.
/// Throws std::invalid_argument for an unknown lemma id.
LemmaReport verify_lemma(int id, std::uint64_t trials, std::uint64_t seed, const ExecutionPolicy& policy = {});

}  // namespace hrmc
