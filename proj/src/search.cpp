#include "hrmc/search.hpp"

#include <omp.h>

#include <bit>
#include <stdexcept>

#include "hrmc/combinations.hpp"

namespace hrmc {

namespace {

using ClassMask = std::uint64_t;

// Depth-first walk over nondecreasing sequences of `levels` masks drawn from
// [0, universe). accept(level, mask) decides whether to descend (and may
// abort the walk by returning Step::Stop); leaf(sequence) is called on full
// sequences and returns true to stop.
enum class Step { Descend, Skip, Stop };

template <class Accept, class Leaf>
bool walk_nondecreasing(std::vector<ClassMask>& sequence, std::size_t level, ClassMask lo, ClassMask universe,
                        Accept& accept, Leaf& leaf) {
  for (ClassMask c = lo; c < universe; ++c) {
    const Step step = accept(level, c);
    if (step == Step::Stop) return true;
    if (step == Step::Skip) continue;
    sequence[level] = c;
    if (level + 1 == sequence.size()) {
      if (leaf(sequence)) return true;
    } else if (walk_nondecreasing(sequence, level + 1, c, universe, accept, leaf)) {
      return true;
    }
  }
  return false;
}

class ColoringSearch {
 public:
  ColoringSearch(const Graph& g, std::size_t a, std::size_t k, std::uint64_t budget)
      : g_(g), n_(g.num_vertices()), a_(a), k_(k), budget_(budget) {
    const std::size_t total = binomial(n_, a_);
    std::vector<std::size_t> attack(a_);
    unrank_combination(0, n_, attack);
    for (std::size_t t = 0; t < total; ++t) {
      attacks_.push_back(attack);
      const auto removed = closed_neighborhood_set(g_, VertexSet::of(n_, attack));
      comp_begin_.push_back(comp_masks_.size());
      for (const auto& component : surviving_components(g_, removed)) {
        comp_masks_.push_back(component.words().empty() ? 0 : component.words()[0]);
      }
      next_combination(attack, n_);
    }
    comp_begin_.push_back(comp_masks_.size());
    alive_.assign((k_ + 1) * total, 0);
    for (std::size_t t = 0; t < total; ++t) {
      const std::size_t count = comp_begin_[t + 1] - comp_begin_[t];
      alive_[t] = count == 64 ? ~ClassMask{0} : (ClassMask{1} << count) - 1;
    }
  }

  Decision run() {
    Decision d;
    d.budget = budget_;
    d.attackers = a_;
    d.palette_size = k_;
    if (!try_expand()) {
      d.outcome = Outcome::Unknown;
      d.nodes_expanded = nodes_;
      return d;
    }
    for (std::size_t t = 0; t < attacks_.size(); ++t) {
      if (alive_[t] == 0) {
        // Some attack removes every vertex; no coloring can be resistant.
        d.outcome = Outcome::Unsat;
        d.nodes_expanded = nodes_;
        return d;
      }
    }

    std::vector<ClassMask> sequence(k_);
    const ClassMask universe = ClassMask{1} << n_;
    auto accept = [this](std::size_t level, ClassMask c) {
      if (!narrow(level, c)) return Step::Skip;
      if (!try_expand()) {
        out_of_budget_ = true;
        return Step::Stop;
      }
      return Step::Descend;
    };
    auto leaf = [this](const std::vector<ClassMask>& classes) { return hr_holds(classes); };
    const bool stopped = walk_nondecreasing(sequence, 0, 0, universe, accept, leaf);

    d.nodes_expanded = nodes_;
    if (out_of_budget_) {
      d.outcome = Outcome::Unknown;
    } else if (stopped) {
      d.outcome = Outcome::Sat;
      d.witness = to_coloring(sequence);
      if (!check_highly(g_, *d.witness, a_, ExecutionPolicy::serial()).highly_resistant) {
        throw std::logic_error("search produced a witness that fails check_highly");
      }
    } else {
      d.outcome = Outcome::Unsat;
    }
    return d;
  }

 private:
  bool try_expand() {
    if (nodes_ >= budget_) return false;
    ++nodes_;
    return true;
  }

  // Row level+1 of alive_: for every attack, the components that meet all
  // classes chosen so far plus `c`. False if some attack has none left.
  bool narrow(std::size_t level, ClassMask c) {
    const std::size_t total = attacks_.size();
    const ClassMask* prev = alive_.data() + level * total;
    ClassMask* next = alive_.data() + (level + 1) * total;
    for (std::size_t t = 0; t < total; ++t) {
      ClassMask kept = 0;
      for (ClassMask bits = prev[t]; bits != 0; bits &= bits - 1) {
        const auto i = static_cast<std::size_t>(std::countr_zero(bits));
        if ((comp_masks_[comp_begin_[t] + i] & c) != 0) kept |= ClassMask{1} << i;
      }
      if (kept == 0) return false;
      next[t] = kept;
    }
    return true;
  }

  // No a-set meets every class.
  bool hr_holds(const std::vector<ClassMask>& classes) const {
    std::vector<ColorMask> vertex_colors(n_, 0);
    for (std::size_t c = 0; c < classes.size(); ++c) {
      for (ClassMask bits = classes[c]; bits != 0; bits &= bits - 1) {
        vertex_colors[std::countr_zero(bits)] |= ColorMask{1} << c;
      }
    }
    const ColorMask full = full_palette_mask(k_);
    for (const auto& attack : attacks_) {
      ColorMask acc = 0;
      for (std::size_t v : attack) acc |= vertex_colors[v];
      if (acc == full) return false;
    }
    return true;
  }

  Multicoloring to_coloring(const std::vector<ClassMask>& sequence) const {
    ColorClasses cls;
    for (ClassMask m : sequence) cls.push_back(VertexSet::from_words(n_, std::span<const Word>(&m, 1)));
    return from_classes(cls, n_);
  }

  const Graph& g_;
  std::size_t n_;
  std::size_t a_;
  std::size_t k_;
  std::uint64_t budget_;
  std::uint64_t nodes_ = 0;
  bool out_of_budget_ = false;

  std::vector<std::vector<std::size_t>> attacks_;
  std::vector<std::size_t> comp_begin_;
  std::vector<ClassMask> comp_masks_;
  std::vector<ClassMask> alive_;  // (k+1) rows of one mask per attack
};

void validate_search(const Graph& g, std::size_t a, std::size_t k) {
  const std::size_t n = g.num_vertices();
  if (a < 1 || a > n) {
    throw std::invalid_argument("attacker count a=" + std::to_string(a) + " must satisfy 1 <= a <= n=" +
                                std::to_string(n));
  }
  if (k < 1 || k > kMaxPalette) {
    throw std::invalid_argument("palette size k=" + std::to_string(k) + " must be in [1, " +
                                std::to_string(kMaxPalette) + "]");
  }
  if (n > kMaxSearchVertices) {
    throw std::invalid_argument("search supports at most " + std::to_string(kMaxSearchVertices) +
                                " vertices, got " + std::to_string(n));
  }
}

}  // namespace

std::string to_string(Outcome outcome) {
  switch (outcome) {
    case Outcome::Sat: return "sat";
    case Outcome::Unsat: return "unsat";
    case Outcome::Unknown: return "unknown";
  }
  return "?";
}

std::string to_string(NonexistenceSummary::Aggregate aggregate) {
  switch (aggregate) {
    case NonexistenceSummary::Aggregate::AllUnsat: return "all-unsat";
    case NonexistenceSummary::Aggregate::FoundSat: return "found-sat";
    case NonexistenceSummary::Aggregate::Unknown: return "unknown";
  }
  return "?";
}

Decision decide(const Graph& g, std::size_t a, std::size_t k, std::uint64_t budget) {
  validate_search(g, a, k);
  if (k <= a) {
    Decision d;
    d.outcome = Outcome::Unsat;
    d.budget = budget;
    d.attackers = a;
    d.palette_size = k;
    d.fast_path = true;
    return d;
  }
  return ColoringSearch(g, a, k, budget).run();
}

MinColorsResult min_colors(const Graph& g, std::size_t a, std::size_t k_max, std::uint64_t budget) {
  validate_search(g, a, std::max<std::size_t>(k_max, 1));
  MinColorsResult result;
  for (std::size_t k = a + 1; k <= k_max; ++k) {
    result.trail.push_back(decide(g, a, k, budget));
    const Outcome outcome = result.trail.back().outcome;
    if (outcome == Outcome::Sat) {
      result.status = MinColorsResult::Status::Found;
      result.colors = k;
      return result;
    }
    if (outcome == Outcome::Unknown) {
      result.status = MinColorsResult::Status::Unknown;
      return result;
    }
  }
  result.status = MinColorsResult::Status::None;
  return result;
}

Graph labeled_graph(std::size_t n, std::uint64_t edge_mask) {
  std::vector<Edge> edges;
  std::size_t bit = 0;
  for (std::size_t u = 0; u < n; ++u) {
    for (std::size_t v = u + 1; v < n; ++v, ++bit) {
      if ((edge_mask >> bit) & 1U) edges.push_back({u, v});
    }
  }
  if (bit < 64 && (edge_mask >> bit) != 0) throw std::invalid_argument("edge mask has bits beyond C(n,2)");
  return Graph::from_edges(n, edges);
}

NonexistenceSummary exhaustive_nonexistence(std::size_t n, std::size_t a, std::size_t k_max, std::uint64_t budget,
                                            const ExecutionPolicy& policy) {
  if (n > kMaxNonexistenceVertices) {
    throw std::invalid_argument("exhaustive nonexistence supports n <= " + std::to_string(kMaxNonexistenceVertices) +
                                " (2^C(n,2) labeled graphs), got n=" + std::to_string(n));
  }
  if (a < 1 || a > n) {
    throw std::invalid_argument("attacker count a=" + std::to_string(a) + " must satisfy 1 <= a <= n=" +
                                std::to_string(n));
  }
  if (k_max < a + 1) throw std::invalid_argument("k_max must be at least a+1");
  if (k_max > kMaxPalette) throw std::invalid_argument("k_max exceeds the palette limit");

  NonexistenceSummary summary;
  summary.num_vertices = n;
  summary.attackers = a;
  summary.k_max = k_max;
  summary.budget_per_decision = budget;
  const std::uint64_t graph_count = std::uint64_t{1} << (n * (n - 1) / 2);
  summary.graphs.resize(graph_count);
  std::vector<std::optional<Multicoloring>> witnesses(graph_count);
  const int threads = resolve_threads(policy);

#pragma omp parallel for schedule(dynamic, 1) num_threads(threads)
  for (std::int64_t i = 0; i < static_cast<std::int64_t>(graph_count); ++i) {
    const auto mask = static_cast<std::uint64_t>(i);
    const Graph g = labeled_graph(n, mask);
    GraphVerdict verdict;
    verdict.edge_mask = mask;
    verdict.outcome = Outcome::Unsat;
    for (std::size_t k = a + 1; k <= k_max; ++k) {
      const Decision d = decide(g, a, k, budget);
      verdict.nodes_expanded += d.nodes_expanded;
      if (d.outcome == Outcome::Sat) {
        verdict.outcome = Outcome::Sat;
        verdict.first_sat_colors = k;
        witnesses[i] = d.witness;
        break;
      }
      if (d.outcome == Outcome::Unknown) verdict.outcome = Outcome::Unknown;
    }
    summary.graphs[i] = verdict;
  }

  bool any_unknown = false;
  for (const auto& verdict : summary.graphs) {
    if (verdict.outcome == Outcome::Sat) {
      summary.aggregate = NonexistenceSummary::Aggregate::FoundSat;
      summary.found = ColoredInstance{"labeled-n" + std::to_string(n) + "-mask" + std::to_string(verdict.edge_mask),
                                      labeled_graph(n, verdict.edge_mask), *witnesses[verdict.edge_mask], a};
      return summary;
    }
    any_unknown |= verdict.outcome == Outcome::Unknown;
  }
  summary.aggregate = any_unknown ? NonexistenceSummary::Aggregate::Unknown : NonexistenceSummary::Aggregate::AllUnsat;
  return summary;
}

std::vector<std::vector<std::uint64_t>> canonical_class_sequences(std::size_t n, std::size_t k) {
  if (n > kMaxSearchVertices || k < 1) throw std::invalid_argument("canonical_class_sequences: n or k out of range");
  std::vector<std::vector<std::uint64_t>> out;
  std::vector<ClassMask> sequence(k);
  auto accept = [](std::size_t, ClassMask) { return Step::Descend; };
  auto leaf = [&out](const std::vector<ClassMask>& s) {
    out.push_back(s);
    return false;
  };
  walk_nondecreasing(sequence, 0, 0, ClassMask{1} << n, accept, leaf);
  return out;
}

}  // namespace hrmc
