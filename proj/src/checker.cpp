#include "hrmc/checker.hpp"

#include <omp.h>

#include <algorithm>
#include <limits>
#include <stdexcept>
#include <string>

#include "attack_kernels.hpp"
#include "hrmc/combinations.hpp"

namespace hrmc {

namespace {

void validate(const Graph& g, const Multicoloring& kappa, std::size_t a) {
  const std::size_t n = g.num_vertices();
  if (a < 1 || a > n) {
    throw std::invalid_argument("attacker count a=" + std::to_string(a) + " must satisfy 1 <= a <= n=" +
                                std::to_string(n));
  }
  if (kappa.size() != n) {
    throw std::invalid_argument("coloring has " + std::to_string(kappa.size()) + " entries but the graph has " +
                                std::to_string(n) + " vertices");
  }
  if (kappa.palette_size() < 1) throw std::invalid_argument("palette must contain at least one color");
}

VertexSet attack_from_rank(std::size_t n, std::size_t a, std::uint64_t rank) {
  std::vector<std::size_t> members(a);
  unrank_combination(rank, n, members);
  return VertexSet::of(n, members);
}

detail::ScanResult run_scan(const detail::PreparedInstance& p, unsigned conditions,
                            const ExecutionPolicy& policy) {
  return detail::scan_parallel(p, conditions, resolve_threads(policy));
}

ConditionResult to_condition(std::optional<std::uint64_t> fail_rank, std::size_t n, std::size_t a) {
  ConditionResult r;
  if (fail_rank) {
    r.holds = false;
    r.witness = attack_from_rank(n, a, *fail_rank);
  }
  return r;
}

}  // namespace

int resolve_threads(const ExecutionPolicy& policy) {
  return policy.threads > 0 ? policy.threads : std::max(1, omp_get_max_threads());
}

ConditionResult check_hr(const Graph& g, const Multicoloring& kappa, std::size_t a,
                         const ExecutionPolicy& policy) {
  validate(g, kappa, a);
  const detail::PreparedInstance p(g, kappa, a);
  return to_condition(run_scan(p, detail::kHrCondition, policy).hr_fail_rank, g.num_vertices(), a);
}

ConditionResult check_resistant(const Graph& g, const Multicoloring& kappa, std::size_t a,
                                const ExecutionPolicy& policy) {
  validate(g, kappa, a);
  const detail::PreparedInstance p(g, kappa, a);
  return to_condition(run_scan(p, detail::kResistanceCondition, policy).resistance_fail_rank,
                      g.num_vertices(), a);
}

CheckReport check_highly(const Graph& g, const Multicoloring& kappa, std::size_t a,
                         const ExecutionPolicy& policy) {
  validate(g, kappa, a);
  const std::size_t n = g.num_vertices();
  const detail::PreparedInstance p(g, kappa, a);
  const auto scan = run_scan(p, detail::kBothConditions, policy);

  CheckReport report;
  report.num_vertices = n;
  report.palette_size = kappa.palette_size();
  report.attackers = a;
  const auto hr = to_condition(scan.hr_fail_rank, n, a);
  const auto res = to_condition(scan.resistance_fail_rank, n, a);
  report.hr_holds = hr.holds;
  report.hr_witness = hr.witness;
  report.resistant = res.holds;
  report.resistance_witness = res.witness;
  report.highly_resistant = hr.holds && res.holds;
  if (scan.hr_fail_rank && scan.resistance_fail_rank) {
    report.attack_sets_examined = std::max(*scan.hr_fail_rank, *scan.resistance_fail_rank) + 1;
  } else {
    report.attack_sets_examined = binomial(n, a);
  }
  return report;
}

bool lemma_disjunction(const Graph& g, const Multicoloring& kappa, std::size_t a_hr, std::size_t r,
                       const ExecutionPolicy& policy) {
  validate(g, kappa, a_hr);
  validate(g, kappa, r);
  if (!check_hr(g, kappa, a_hr, policy).holds) return true;
  return !check_resistant(g, kappa, r, policy).holds;
}

SampleReport sample_check(const Graph& g, const Multicoloring& kappa, std::size_t a, std::uint64_t trials,
                          std::uint64_t seed, const ExecutionPolicy& policy) {
  validate(g, kappa, a);
  if (trials < 1) throw std::invalid_argument("sample_check requires at least one trial");
  const std::size_t n = g.num_vertices();
  const detail::PreparedInstance p(g, kappa, a);
  constexpr std::uint64_t kNone = std::numeric_limits<std::uint64_t>::max();

  std::uint64_t hr_failures = 0;
  std::uint64_t res_failures = 0;
  std::uint64_t first_hr = kNone;
  std::uint64_t first_res = kNone;
  const int threads = resolve_threads(policy);

#pragma omp parallel for schedule(static) num_threads(threads) \
    reduction(+ : hr_failures, res_failures) reduction(min : first_hr, first_res)
  for (std::int64_t t = 0; t < static_cast<std::int64_t>(trials); ++t) {
    const auto trial = static_cast<std::uint64_t>(t);
    const auto attack = detail::sample_attack(n, a, seed, trial);
    if (detail::covers_palette(p, attack)) {
      ++hr_failures;
      first_hr = std::min(first_hr, trial);
    }
    if (!detail::leaves_full_component(p, attack)) {
      ++res_failures;
      first_res = std::min(first_res, trial);
    }
  }

  SampleReport report;
  report.trials = trials;
  report.seed = seed;
  report.attackers = a;
  report.hr_failures = hr_failures;
  report.resistance_failures = res_failures;
  if (first_hr != kNone) {
    const auto members = detail::sample_attack(n, a, seed, first_hr);
    report.first_hr_failure = VertexSet::of(n, members);
    if (!attack_covers_palette(kappa, *report.first_hr_failure)) {
      throw std::logic_error("sampled HR failure did not replay");
    }
  }
  if (first_res != kNone) {
    const auto members = detail::sample_attack(n, a, seed, first_res);
    report.first_resistance_failure = VertexSet::of(n, members);
    if (attack_leaves_full_component(g, kappa, *report.first_resistance_failure)) {
      throw std::logic_error("sampled resistance failure did not replay");
    }
  }
  return report;
}

bool attack_covers_palette(const Multicoloring& kappa, const VertexSet& attack) {
  return has_all_colors(kappa, attack);
}

bool attack_leaves_full_component(const Graph& g, const Multicoloring& kappa, const VertexSet& attack) {
  const auto removed = closed_neighborhood_set(g, attack);
  for (const auto& component : surviving_components(g, removed)) {
    if (has_all_colors(kappa, component)) return true;
  }
  return false;
}

}  // namespace hrmc
