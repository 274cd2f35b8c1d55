#include <benchmark/benchmark.h>

#include "civar/construct.hpp"
#include "corpus.hpp"

using namespace civar;

static void BM_ResolveResidueField(benchmark::State& state) {
  auto r3 = corpus::r3();
  auto k = residue_field(r3);
  for (auto _ : state) {
    Resolution res = resolve_min(k, static_cast<int>(state.range(0)));
    benchmark::DoNotOptimize(res.betti());
  }
}
BENCHMARK(BM_ResolveResidueField)->Arg(6)->Arg(10)->Arg(14)->Unit(benchmark::kMillisecond);

static void BM_GroebnerCyclic(benchmark::State& state) {
  auto r = make_ring(101, {"x", "y", "z", "w"});
  std::vector<Poly> gens{poly_parse("x^2 - y*z", r), poly_parse("y^2 - z*w", r),
                         poly_parse("z^2 - x*w", r), poly_parse("x*y - w^2", r)};
  for (auto _ : state) benchmark::DoNotOptimize(ideal_basis(r, gens).size());
}
BENCHMARK(BM_GroebnerCyclic)->Unit(benchmark::kMillisecond);

static void BM_SupportVariety(benchmark::State& state) {
  auto r3 = corpus::r3();
  auto k = residue_field(r3);
  for (auto _ : state) benchmark::DoNotOptimize(support_variety(k).steps);
}
BENCHMARK(BM_SupportVariety)->Unit(benchmark::kMillisecond);

static void BM_Realize(benchmark::State& state) {
  auto r3 = corpus::r3();
  std::vector<Poly> etas{corpus::hpoly(r3, "chi1"), corpus::hpoly(r3, "chi2 + chi3")};
  for (auto _ : state) benchmark::DoNotOptimize(realize(r3, etas).module.num_gens());
}
BENCHMARK(BM_Realize)->Unit(benchmark::kMillisecond);

static void BM_Decompose(benchmark::State& state) {
  auto r1 = corpus::r1();
  auto k = residue_field(r1);
  auto m = direct_sum(cut_variety(k, corpus::hpoly(r1, "chi1")), cut_variety(k, corpus::hpoly(r1, "chi2")));
  for (auto _ : state) benchmark::DoNotOptimize(decompose(m).size());
}
BENCHMARK(BM_Decompose)->Unit(benchmark::kMillisecond);
BENCHMARK_MAIN();
