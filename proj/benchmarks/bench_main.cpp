#include <benchmark/benchmark.h>

#include "kprime/axioms.hpp"
#include "kprime/builders.hpp"
#include "kprime/ktheory.hpp"
#include "kprime/nset.hpp"
#include "kprime/smith.hpp"

using namespace kprime;

namespace {

  void BM_EnumerateNt3(benchmark::State& state) {
    auto const a = share(make_truncated_polynomial(3));
    auto const n = static_cast<std::size_t>(state.range(0));
    for (auto _ : state) {
      benchmark::DoNotOptimize(enumerate_asets(a, n, ASetFlavor::all));
    }
  }
  BENCHMARK(BM_EnumerateNt3)->DenseRange(3, 5)->Unit(benchmark::kMillisecond);

  void BM_EnumeratePcPrototype(benchmark::State& state) {
    auto const a = share(make_prototype(2));
    auto const n = static_cast<std::size_t>(state.range(0));
    for (auto _ : state) {
      benchmark::DoNotOptimize(enumerate_asets(a, n, ASetFlavor::pc));
    }
  }
  BENCHMARK(BM_EnumeratePcPrototype)->DenseRange(3, 5)->Unit(benchmark::kMillisecond);

  void BM_EnumerateNSets(benchmark::State& state) {
    auto const n = static_cast<std::size_t>(state.range(0));
    for (auto _ : state) {
      benchmark::DoNotOptimize(enumerate_nsets(n));
    }
  }
  BENCHMARK(BM_EnumerateNSets)->DenseRange(3, 5)->Unit(benchmark::kMillisecond);

  // Dense random integer matrices with entries in [-50, 50].
  void BM_SmithRandom(benchmark::State& state) {
    auto const n = static_cast<std::size_t>(state.range(0));
    Rng        rng(1);
    IntMatrix  m(n, n + 2);
    for (std::size_t i = 0; i < m.rows(); ++i) {
      for (std::size_t j = 0; j < m.cols(); ++j) {
        m.at(i, j) = static_cast<long>(rng.below(101)) - 50;
      }
    }
    for (auto _ : state) {
      benchmark::DoNotOptimize(smith_normal_form(m));
    }
  }
  BENCHMARK(BM_SmithRandom)->RangeMultiplier(2)->Range(4, 32)->Unit(benchmark::kMillisecond);

  void BM_PresentationAndSmith(benchmark::State& state) {
    auto const a = share(make_truncated_polynomial(3));
    auto const n = static_cast<std::size_t>(state.range(0));
    for (auto _ : state) {
      benchmark::DoNotOptimize(smith(build_presentation(a, Flavor::all, n)));
    }
  }
  BENCHMARK(BM_PresentationAndSmith)->DenseRange(3, 5)->Unit(benchmark::kMillisecond);

  void BM_CanonicalKey(benchmark::State& state) {
    auto const a   = share(make_group_monoid(symmetric_group(3)));
    Rng        rng(2);
    std::vector<FiniteASet> sets;
    for (int i = 0; i < 64; ++i) {
      sets.push_back(random_aset(a, rng, static_cast<std::size_t>(state.range(0))));
    }
    std::size_t i = 0;
    for (auto _ : state) {
      benchmark::DoNotOptimize(canonical_key(sets[i++ % sets.size()]));
    }
  }
  BENCHMARK(BM_CanonicalKey)->Arg(6)->Arg(12)->Arg(24);

  void BM_AxiomSuite(benchmark::State& state) {
    auto const   a = share(make_truncated_polynomial(3));
    SampleConfig cfg;
    cfg.samples = 100;
    for (auto _ : state) {
      benchmark::DoNotOptimize(check_all_axioms(a, cfg));
    }
  }
  BENCHMARK(BM_AxiomSuite)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
