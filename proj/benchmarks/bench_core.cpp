#include <benchmark/benchmark.h>

#include "ras/audit.hpp"
#include "ras/enumeration.hpp"
#include "ras/scenario.hpp"

using namespace ras;

static void BM_Approximate(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  auto u = make_numbered_universe(n);
  std::vector<std::size_t> block_of(n);
  for (std::size_t i = 0; i < n; ++i) block_of[i] = i / 3;
  const ApproxSpace space(partition_from_assignment(u, block_of));
  std::vector<SubsetU> sets;
  for (std::size_t m = 0; m < 64; ++m) sets.push_back(SubsetU::from_mask(u, (m * 0x9e3779b97f4a7c15ull) >> (64 - n)));
  std::size_t i = 0;
  for (auto _ : state) benchmark::DoNotOptimize(space.approximate(sets[i++ % sets.size()]));
}
BENCHMARK(BM_Approximate)->Arg(8)->Arg(32)->Arg(256);

static void BM_LawSweep(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(sweep_approx_law(ApproxLaw::L5, state.range(0)));
}
BENCHMARK(BM_LawSweep)->DenseRange(3, 5)->Unit(benchmark::kMillisecond);

static void BM_Classify(benchmark::State& state) {
  const auto s = load_fixture("example31.ras");
  const auto& c = s.table("C");
  for (auto _ : state) benchmark::DoNotOptimize(classify(c));
}
BENCHMARK(BM_Classify);

static void BM_SearchInverseFree(benchmark::State& state) {
  SearchSpec spec;
  spec.universe_size = 3;
  spec.carrier_size = 3;
  spec.law_constraints = {{Law::C4, Status::AllFalse}};
  spec.limit = 1'000'000;
  for (auto _ : state) benchmark::DoNotOptimize(search(spec));
}
BENCHMARK(BM_SearchInverseFree)->Unit(benchmark::kMillisecond);

static void BM_ParseFixture(benchmark::State& state) {
  const std::string text(fixture_text("example31.ras"));
  for (auto _ : state) benchmark::DoNotOptimize(parse_scenario(text));
  state.SetBytesProcessed(static_cast<std::int64_t>(state.iterations() * text.size()));
}
BENCHMARK(BM_ParseFixture);

BENCHMARK_MAIN();
