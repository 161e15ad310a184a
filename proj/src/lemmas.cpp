#include "hrmc/lemmas.hpp"

#include <limits>
#include <stdexcept>

#include "hrmc/random.hpp"

namespace hrmc {

const std::vector<int>& lemma_ids() {
  static const std::vector<int> ids = {4, 5, 7, 9, 10, 11, 12};
  return ids;
}

std::optional<LemmaScope> lemma_scope(int id) {
  LemmaScope s;
  switch (id) {
    case 4:
      s = {4, 3, 7, std::nullopt, 7, 1, 8, 3, 1, "graphs with at most 7 vertices other than C7, k <= 8"};
      break;
    case 5:
      s = {5, 7, 7, 7, std::nullopt, 6, 6, 3, 1, "C7 with 6 colors"};
      break;
    case 7:
      s = {7, 4, 8, std::nullopt, 8, 1, 9, 4, 1, "graphs with at most 8 vertices other than C8, k <= 9"};
      break;
    case 9:
      s = {9, 8, 8, 8, std::nullopt, 9, 9, 4, 1, "C8 with 9 colors"};
      break;
    case 10:
      s = {10, 4, 8, std::nullopt, std::nullopt, 9, 9, 4, 1, "graphs with at most 8 vertices, 9 colors"};
      break;
    case 11:
      s = {11, 4, 12, std::nullopt, std::nullopt, 9, 9, 4, 2, "graphs with at most 12 vertices, 9 colors"};
      break;
    case 12:
      s = {12, 4, 16, std::nullopt, std::nullopt, 9, 9, 4, 3, "graphs with at most 16 vertices, 9 colors"};
      break;
    default:
      return std::nullopt;
  }
  return s;
}

ColoredInstance sample_lemma_instance(const LemmaScope& scope, std::uint64_t seed, std::uint64_t trial) {
  Rng rng(seed, trial);
  Graph g;
  if (scope.fixed_cycle) {
    g = cycle(*scope.fixed_cycle);
  } else {
    const auto n = static_cast<std::size_t>(rng.between(scope.min_vertices, scope.max_vertices));
    do {
      std::vector<Edge> edges;
      for (std::size_t u = 0; u < n; ++u) {
        for (std::size_t v = u + 1; v < n; ++v) {
          if (rng.coin()) edges.push_back({u, v});
        }
      }
      g = Graph::from_edges(n, edges);
    } while (scope.excluded_cycle && is_cycle_of_length(g, *scope.excluded_cycle));
  }

  const auto k = static_cast<std::size_t>(rng.between(scope.k_min, scope.k_max));
  enum class Density { Quarter, Half, ThreeQuarters };
  Density density = Density::Half;
  if (rng.below(10) == 0) density = rng.coin() ? Density::Quarter : Density::ThreeQuarters;

  Multicoloring kappa(k, g.num_vertices());
  for (std::size_t v = 0; v < g.num_vertices(); ++v) {
    ColorMask mask = 0;
    for (std::size_t c = 0; c < k; ++c) {
      const bool first = rng.coin();
      bool member = first;
      if (density != Density::Half) {
        const bool second = rng.coin();
        member = density == Density::Quarter ? (first && second) : (first || second);
      }
      if (member) mask |= ColorMask{1} << c;
    }
    kappa.set(v, ColorSet::from_mask(k, mask));
  }
  return {"lemma" + std::to_string(scope.id) + "-seed" + std::to_string(seed) + "-trial" + std::to_string(trial),
          std::move(g), std::move(kappa), scope.a_hr};
}

LemmaReport verify_lemma(int id, std::uint64_t trials, std::uint64_t seed, const ExecutionPolicy& policy) {
  const auto scope = lemma_scope(id);
  if (!scope) throw std::invalid_argument("unknown lemma id " + std::to_string(id));
  constexpr std::uint64_t kNone = std::numeric_limits<std::uint64_t>::max();

  std::uint64_t hr_failed = 0;
  std::uint64_t not_resistant = 0;
  std::uint64_t violations = 0;
  std::uint64_t first_violation = kNone;
  const int threads = resolve_threads(policy);

#pragma omp parallel for schedule(dynamic, 256) num_threads(threads) \
    reduction(+ : hr_failed, not_resistant, violations) reduction(min : first_violation)
  for (std::int64_t t = 0; t < static_cast<std::int64_t>(trials); ++t) {
    const auto trial = static_cast<std::uint64_t>(t);
    const auto inst = sample_lemma_instance(*scope, seed, trial);
    // Same evaluation as lemma_disjunction, split to record which side held.
    if (!check_hr(inst.graph, inst.coloring, scope->a_hr, ExecutionPolicy::serial()).holds) {
      ++hr_failed;
    } else if (!check_resistant(inst.graph, inst.coloring, scope->r, ExecutionPolicy::serial()).holds) {
      ++not_resistant;
    } else {
      ++violations;
      first_violation = std::min(first_violation, trial);
    }
  }

  LemmaReport report;
  report.id = id;
  report.trials = trials;
  report.seed = seed;
  report.hr_failed = hr_failed;
  report.not_resistant = not_resistant;
  report.violations = violations;
  if (first_violation != kNone) {
    report.first_violation_trial = first_violation;
    report.counterexample = sample_lemma_instance(*scope, seed, first_violation);
  }
  return report;
}

}  // namespace hrmc
