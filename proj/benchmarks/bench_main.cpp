#include <benchmark/benchmark.h>

#include "skewbrace/catalog.hpp"
#include "skewbrace/lattice.hpp"
#include "skewbrace/rota_baxter.hpp"
#include "skewbrace/schreier.hpp"
#include "skewbrace/structure.hpp"

namespace {

void BM_EnumerateOrder8(benchmark::State& state) {
  auto groups = skb::small_groups(8);
  for (auto _ : state) {
    std::size_t total = 0;
    for (const auto& g : groups) total += skb::enumerate_circ_ops(g).size();
    benchmark::DoNotOptimize(total);
  }
}
BENCHMARK(BM_EnumerateOrder8)->Unit(benchmark::kMillisecond);

void BM_Automorphisms(benchmark::State& state) {
  auto g = skb::small_groups(12).back();
  for (auto _ : state) benchmark::DoNotOptimize(skb::automorphism_group(g).size());
}
BENCHMARK(BM_Automorphisms);

void BM_VerifyCyclic(benchmark::State& state) {
  int n = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(skb::verify_cyclic1(n).ok());
}
BENCHMARK(BM_VerifyCyclic)->DenseRange(2, 6)->Unit(benchmark::kMillisecond);

void BM_SampledBraceCheck(benchmark::State& state) {
  auto theta = skb::FreeAutomorphism::inner(skb::FreeWord::parse("x1 x2", 3));
  for (auto _ : state) benchmark::DoNotOptimize(skb::sampled_brace_check(theta, 200, 6, 0).ok());
}
BENCHMARK(BM_SampledBraceCheck)->Unit(benchmark::kMillisecond);

void BM_LatticeCheck(benchmark::State& state) {
  int depth = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(skb::lattice_system_check(1, depth, 100, 0).ok());
}
BENCHMARK(BM_LatticeCheck)->Arg(2)->Arg(4)->Arg(8)->Unit(benchmark::kMillisecond);

void BM_RbSearch(benchmark::State& state) {
  auto g = skb::symmetric3();
  for (auto _ : state) benchmark::DoNotOptimize(skb::find_rb_operators(g, false).size());
}
BENCHMARK(BM_RbSearch)->Unit(benchmark::kMillisecond);

void BM_TrivialityStep(benchmark::State& state) {
  auto g = skb::dihedral(4);
  skb::SkewBrace b(g, g.opposite());
  for (auto _ : state) benchmark::DoNotOptimize(skb::triviality_step(b));
}
BENCHMARK(BM_TrivialityStep);

}  // namespace

BENCHMARK_MAIN();
