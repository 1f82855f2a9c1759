// Serial vs OpenMP trace kernels on the top degree of family arrangements.

#include "reflact/catalog.hpp"
#include "reflact/groups.hpp"
#include "reflact/kernels.hpp"

#include <benchmark/benchmark.h>
#include <omp.h>

#include <map>
#include <memory>
#include <tuple>

using namespace reflact;

namespace {

struct Fixture {
  MatrixGroup g;
  std::unique_ptr<OSAlgebra> os;
  std::unique_ptr<HyperplaneAction> act;
  std::vector<const int*> perms;
};

// Built once per (r, p, n); straightening tables warm before timing.
Fixture& fixture(int r, int p, int n) {
  static std::map<std::tuple<int, int, int>, std::unique_ptr<Fixture>> cache;
  auto& slot = cache[{r, p, n}];
  if (!slot) {
    slot = std::make_unique<Fixture>(Fixture{make_grpn(r, p, n), nullptr, nullptr, {}});
    const Arrangement a = make_arrangement(p < r ? ArrKind::Full : ArrKind::Zero, r, n);
    slot->os = std::make_unique<OSAlgebra>(a);
    slot->act = std::make_unique<HyperplaneAction>(slot->g, slot->os->arrangement());
    for (std::size_t e = 0; e < slot->g.order(); ++e) slot->perms.push_back(slot->act->perm(static_cast<int>(e)));
    slot->os->dim(n);
  }
  return *slot;
}

void args(benchmark::internal::Benchmark* b) {
  b->Args({2, 1, 4})->Args({3, 1, 4})->Args({4, 2, 4})->Args({4, 1, 4});
  b->Unit(benchmark::kMillisecond);
}

void BM_TracesSerial(benchmark::State& st) {
  const int n = static_cast<int>(st.range(2));
  Fixture& f = fixture(static_cast<int>(st.range(0)), static_cast<int>(st.range(1)), n);
  for (auto _ : st) benchmark::DoNotOptimize(traces_serial(*f.os, n, f.perms));
  st.counters["elements"] = static_cast<double>(f.perms.size());
  st.counters["dim"] = static_cast<double>(f.os->dim(n));
}

void BM_TracesParallel(benchmark::State& st) {
  const int n = static_cast<int>(st.range(2));
  Fixture& f = fixture(static_cast<int>(st.range(0)), static_cast<int>(st.range(1)), n);
  for (auto _ : st) benchmark::DoNotOptimize(traces_parallel(*f.os, n, f.perms));
  st.counters["elements"] = static_cast<double>(f.perms.size());
  st.counters["threads"] = omp_get_max_threads();
}

}  // namespace

BENCHMARK(BM_TracesSerial)->Apply(args);
BENCHMARK(BM_TracesParallel)->Apply(args)->UseRealTime();

BENCHMARK_MAIN();
