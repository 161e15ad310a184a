// Serial vs OpenMP attack-set scan on the certified constructions.

#include <benchmark/benchmark.h>

#include <omp.h>

#include "attack_kernels.hpp"
#include "hrmc/combinations.hpp"
#include "hrmc/constructions.hpp"

namespace {

using hrmc::detail::PreparedInstance;

const hrmc::ColoredInstance& instance(int index) {
  static const auto cat = hrmc::catalog();
  return cat.at(static_cast<std::size_t>(index));
}

void BM_ScanSerial(benchmark::State& state) {
  const auto& inst = instance(static_cast<int>(state.range(0)));
  const PreparedInstance p(inst.graph, inst.coloring, inst.attackers);
  const auto total = hrmc::binomial(p.num_vertices, p.attackers);
  for (auto _ : state) {
    benchmark::DoNotOptimize(hrmc::detail::scan_serial(p, hrmc::detail::kBothConditions, 0, total));
  }
  state.SetLabel(inst.name);
  state.SetItemsProcessed(static_cast<std::int64_t>(state.iterations() * total));
}

void BM_ScanParallel(benchmark::State& state) {
  const auto& inst = instance(static_cast<int>(state.range(0)));
  const PreparedInstance p(inst.graph, inst.coloring, inst.attackers);
  const auto total = hrmc::binomial(p.num_vertices, p.attackers);
  const auto threads = static_cast<int>(state.range(1));
  for (auto _ : state) {
    benchmark::DoNotOptimize(hrmc::detail::scan_parallel(p, hrmc::detail::kBothConditions, threads));
  }
  state.SetLabel(inst.name + " threads=" + std::to_string(threads));
  state.SetItemsProcessed(static_cast<std::int64_t>(state.iterations() * total));
}

void catalog_args(benchmark::internal::Benchmark* b) {
  for (int i = 0; i < static_cast<int>(hrmc::catalog().size()); ++i) b->Arg(i);
}

// (catalog index, threads); threads run up to the machine's OpenMP maximum.
void catalog_thread_args(benchmark::internal::Benchmark* b) {
  const int max_threads = omp_get_max_threads();
  for (int i = 0; i < static_cast<int>(hrmc::catalog().size()); ++i) {
    for (int t = 1; t < max_threads; t *= 2) b->Args({i, t});
    b->Args({i, max_threads});
  }
}

}  // namespace

BENCHMARK(BM_ScanSerial)->Apply(catalog_args)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_ScanParallel)->Apply(catalog_thread_args)->Unit(benchmark::kMillisecond)->UseRealTime();

BENCHMARK_MAIN();
