#include "attack_kernels.hpp"

#include <omp.h>

#include <algorithm>
#include <array>
#include <atomic>
#include <bit>
#include <limits>
#include <type_traits>

#include "hrmc/combinations.hpp"
#include "hrmc/random.hpp"

namespace hrmc::detail {

PreparedInstance::PreparedInstance(const Graph& g, const Multicoloring& kappa, std::size_t a)
    : num_vertices(g.num_vertices()),
      width(words_for(g.num_vertices())),
      attackers(a),
      colors(kappa.masks().begin(), kappa.masks().end()),
      full(kappa.full_mask()) {
  closed.reserve(num_vertices * width);
  for (std::size_t v = 0; v < num_vertices; ++v) {
    const auto w = g.closed_mask(v).words();
    closed.insert(closed.end(), w.begin(), w.end());
  }
  const VertexSet everyone = VertexSet::full(num_vertices);
  all.assign(everyone.words().begin(), everyone.words().end());
}

namespace {

constexpr std::uint64_t kNone = std::numeric_limits<std::uint64_t>::max();

// kW > 0 fixes the block count at compile time; kW == 0 reads it from the
// instance.
template <std::size_t kW>
class AttackEvaluator {
  using Buffer = std::conditional_t<kW == 0, std::vector<Word>, std::array<Word, (kW == 0 ? 1 : kW)>>;

 public:
  explicit AttackEvaluator(const PreparedInstance& p) : p_(p) {
    if constexpr (kW == 0) {
      survivors_.assign(p.width, 0);
      component_.assign(p.width, 0);
      frontier_.assign(p.width, 0);
      grow_.assign(p.width, 0);
    }
  }

  bool covers_palette(std::span<const std::size_t> attack) const {
    ColorMask acc = 0;
    for (std::size_t v : attack) acc |= p_.colors[v];
    return acc == p_.full;
  }

  bool leaves_full_component(std::span<const std::size_t> attack) {
    const std::size_t width = this->width();
    for (std::size_t w = 0; w < width; ++w) survivors_[w] = p_.all[w];
    for (std::size_t v : attack) {
      const Word* m = p_.closed.data() + v * width;
      for (std::size_t w = 0; w < width; ++w) survivors_[w] &= ~m[w];
    }
    for (;;) {
      std::size_t seed_word = 0;
      while (seed_word < width && survivors_[seed_word] == 0) ++seed_word;
      if (seed_word == width) return false;

      for (std::size_t w = 0; w < width; ++w) component_[w] = frontier_[w] = 0;
      const Word seed_bit = survivors_[seed_word] & (~survivors_[seed_word] + 1);
      component_[seed_word] = frontier_[seed_word] = seed_bit;
      ColorMask colors = p_.colors[seed_word * kWordBits + std::countr_zero(seed_bit)];

      // Breadth-first growth over survivor masks; stop as soon as the
      // partial component already carries every color.
      while (colors != p_.full) {
        for (std::size_t w = 0; w < width; ++w) grow_[w] = 0;
        for (std::size_t fw = 0; fw < width; ++fw) {
          for (Word bits = frontier_[fw]; bits != 0; bits &= bits - 1) {
            const std::size_t v = fw * kWordBits + std::countr_zero(bits);
            const Word* m = p_.closed.data() + v * width;
            for (std::size_t w = 0; w < width; ++w) grow_[w] |= m[w];
          }
        }
        bool grew = false;
        for (std::size_t w = 0; w < width; ++w) {
          const Word fresh = grow_[w] & survivors_[w] & ~component_[w];
          frontier_[w] = fresh;
          component_[w] |= fresh;
          grew |= fresh != 0;
          for (Word bits = fresh; bits != 0; bits &= bits - 1) {
            colors |= p_.colors[w * kWordBits + std::countr_zero(bits)];
          }
        }
        if (!grew) break;
      }
      if (colors == p_.full) return true;
      for (std::size_t w = 0; w < width; ++w) survivors_[w] &= ~component_[w];
    }
  }

  ScanResult scan(unsigned conditions, std::uint64_t begin, std::uint64_t end) {
    ScanResult result;
    if (begin >= end || conditions == 0) return result;
    std::vector<std::size_t> attack(p_.attackers);
    unrank_combination(begin, p_.num_vertices, attack);
    bool want_hr = (conditions & kHrCondition) != 0;
    bool want_res = (conditions & kResistanceCondition) != 0;
    for (std::uint64_t rank = begin; rank < end; ++rank) {
      if (want_hr && covers_palette(attack)) {
        result.hr_fail_rank = rank;
        want_hr = false;
      }
      if (want_res && !leaves_full_component(attack)) {
        result.resistance_fail_rank = rank;
        want_res = false;
      }
      if (!want_hr && !want_res) break;
      next_combination(attack, p_.num_vertices);
    }
    return result;
  }

 private:
  std::size_t width() const {
    if constexpr (kW == 0) {
      return p_.width;
    } else {
      return kW;
    }
  }

  const PreparedInstance& p_;
  Buffer survivors_{};
  Buffer component_{};
  Buffer frontier_{};
  Buffer grow_{};
};

template <class F>
decltype(auto) with_evaluator(const PreparedInstance& p, F&& f) {
  switch (p.width) {
    case 0:
    case 1: {
      AttackEvaluator<1> e(p);
      return f(e);
    }
    case 2: {
      AttackEvaluator<2> e(p);
      return f(e);
    }
    default: {
      AttackEvaluator<0> e(p);
      return f(e);
    }
  }
}

void atomic_min(std::atomic<std::uint64_t>& target, std::uint64_t value) {
  std::uint64_t current = target.load(std::memory_order_relaxed);
  while (value < current && !target.compare_exchange_weak(current, value, std::memory_order_relaxed)) {
  }
}

}  // namespace

ScanResult scan_serial(const PreparedInstance& p, unsigned conditions, std::uint64_t begin,
                       std::uint64_t end) {
  return with_evaluator(p, [&](auto& e) { return e.scan(conditions, begin, end); });
}

ScanResult scan_parallel(const PreparedInstance& p, unsigned conditions, int threads) {
  const std::uint64_t total = binomial(p.num_vertices, p.attackers);
  if (threads <= 1 || total < 2048) return scan_serial(p, conditions, 0, total);

  const std::uint64_t chunks = std::min<std::uint64_t>(total / 512, static_cast<std::uint64_t>(threads) * 32);
  const std::uint64_t chunk_size = (total + chunks - 1) / chunks;
  std::atomic<std::uint64_t> best_hr{kNone};
  std::atomic<std::uint64_t> best_res{kNone};

#pragma omp parallel for schedule(dynamic, 1) num_threads(threads)
  for (std::int64_t c = 0; c < static_cast<std::int64_t>(chunks); ++c) {
    const std::uint64_t begin = static_cast<std::uint64_t>(c) * chunk_size;
    const std::uint64_t end = std::min(total, begin + chunk_size);
    if (begin >= end) continue;
    // A chunk cannot improve on a failure already found at a lower rank.
    unsigned wanted = 0;
    if ((conditions & kHrCondition) && best_hr.load(std::memory_order_relaxed) > begin) wanted |= kHrCondition;
    if ((conditions & kResistanceCondition) && best_res.load(std::memory_order_relaxed) > begin) {
      wanted |= kResistanceCondition;
    }
    if (wanted == 0) continue;
    const ScanResult local = scan_serial(p, wanted, begin, end);
    if (local.hr_fail_rank) atomic_min(best_hr, *local.hr_fail_rank);
    if (local.resistance_fail_rank) atomic_min(best_res, *local.resistance_fail_rank);
  }

  ScanResult result;
  if (best_hr.load() != kNone) result.hr_fail_rank = best_hr.load();
  if (best_res.load() != kNone) result.resistance_fail_rank = best_res.load();
  return result;
}

bool covers_palette(const PreparedInstance& p, std::span<const std::size_t> attack) {
  return with_evaluator(p, [&](auto& e) { return e.covers_palette(attack); });
}

bool leaves_full_component(const PreparedInstance& p, std::span<const std::size_t> attack) {
  return with_evaluator(p, [&](auto& e) { return e.leaves_full_component(attack); });
}

std::vector<std::size_t> sample_attack(std::size_t n, std::size_t a, std::uint64_t seed, std::uint64_t trial) {
  Rng rng(seed, trial);
  std::vector<std::size_t> chosen;
  chosen.reserve(a);
  for (std::size_t j = n - a; j < n; ++j) {
    const auto t = static_cast<std::size_t>(rng.below(j + 1));
    if (std::find(chosen.begin(), chosen.end(), t) == chosen.end()) {
      chosen.push_back(t);
    } else {
      chosen.push_back(j);
    }
  }
  std::sort(chosen.begin(), chosen.end());
  return chosen;
}

}  // namespace hrmc::detail
