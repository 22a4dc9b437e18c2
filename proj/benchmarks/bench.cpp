#include <benchmark/benchmark.h>

#include "dgcm/cm_analysis.hpp"
#include "dgcm/parse.hpp"

using namespace dgcm;

static void BM_Groebner(benchmark::State& state) {
  auto r = make_ring(32003, {"x", "y", "z"});
  for (auto _ : state) {
    Ideal i = Ideal::parse(r, {"x^2 - y*z", "x*y - z^2", "y^3 - x*z^2"});
    benchmark::DoNotOptimize(i.groebner_basis().elements().size());
  }
}
BENCHMARK(BM_Groebner);

static void BM_FreeResolution(benchmark::State& state) {
  auto r = make_ring(32003, {"x", "y", "z"});
  auto m = PresentedModule::cyclic(Ideal::parse(r, {"x*y", "x*z", "y*z", "x^2"}));
  for (auto _ : state) benchmark::DoNotOptimize(free_resolution(m).length());
}
BENCHMARK(BM_FreeResolution);

static void BM_CheckLocalCM(benchmark::State& state) {
  auto r = make_ring(32003, {"x", "y", "z"});
  Ideal base = Ideal::parse(r, {"y^2*z", "x*y*z"});
  auto m = PresentedModule::cyclic(base + Ideal::parse(r, {"z"}));
  for (auto _ : state) {
    auto a = build_trivial_extension(base, m, 2);
    benchmark::DoNotOptimize(check_local_cm(a).verdict);
  }
}
BENCHMARK(BM_CheckLocalCM);

BENCHMARK_MAIN();
