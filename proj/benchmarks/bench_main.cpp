#include <benchmark/benchmark.h>

#include <random>

#include "fbc/automorphism_text.hpp"
#include "fbc/dynamics.hpp"
#include "fbc/finite_quotients.hpp"
#include "fbc/free_map.hpp"
#include "fbc/mapping_torus.hpp"

namespace {

const fbc::FreeMap& psi() {
  static const fbc::FreeMap f = fbc::parse_automorphism("a->b; b->c; c->cA");
  return f;
}

void BM_IterateOrbit(benchmark::State& state) {
  const auto steps = static_cast<int>(state.range(0));
  for (auto _ : state) {
    fbc::Word w = fbc::Word::generator(3, 3);
    for (int k = 0; k < steps; ++k) w = fbc::cyclic_core(fbc::apply(psi(), w));
    benchmark::DoNotOptimize(w.size());
  }
}
BENCHMARK(BM_IterateOrbit)->Arg(20)->Arg(40)->Arg(60);

void BM_EstimateStretch(benchmark::State& state) {
  fbc::StretchOptions opts;
  opts.depth = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(fbc::estimate_stretch(psi(), opts).lambda_hat);
}
BENCHMARK(BM_EstimateStretch)->Arg(40)->Arg(80)->Unit(benchmark::kMillisecond);

void BM_Invert(benchmark::State& state) {
  std::mt19937_64 rng(1);
  const fbc::FreeMap f = fbc::random_nielsen_automorphism(4, static_cast<int>(state.range(0)), rng);
  for (auto _ : state) benchmark::DoNotOptimize(fbc::invert(f));
}
BENCHMARK(BM_Invert)->Arg(10)->Arg(30);

void BM_CountHoms(benchmark::State& state) {
  const fbc::Presentation p = fbc::mapping_torus_presentation(psi());
  const fbc::FiniteGroup q = state.range(0) == 0 ? fbc::alternating_group(5) : fbc::symmetric_group(5);
  for (auto _ : state) benchmark::DoNotOptimize(fbc::count_quotients(p, q));
  state.SetLabel(q.label());
}
BENCHMARK(BM_CountHoms)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

void BM_Fingerprint(benchmark::State& state) {
  const fbc::Presentation p = fbc::mapping_torus_presentation(psi());
  const auto lib = fbc::standard_library();
  for (auto _ : state) benchmark::DoNotOptimize(fbc::fingerprint(p, lib));
}
BENCHMARK(BM_Fingerprint)->Unit(benchmark::kMillisecond);

void BM_ScanPeriodic(benchmark::State& state) {
  const int len = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(fbc::scan_periodic_classes(psi(), {len, 6, 1}).candidates);
}
BENCHMARK(BM_ScanPeriodic)->Arg(4)->Arg(6)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
