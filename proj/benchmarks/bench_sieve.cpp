#include <benchmark/benchmark.h>

#include "ppnkit/erdos_moser.hpp"
#include "ppnkit/sieve.hpp"

namespace {

void BM_sieve_count(benchmark::State& state) {
  auto limit = static_cast<std::uint64_t>(state.range(0));
  for (auto _ : state)
    benchmark::DoNotOptimize(ppnkit::count_primes_up_to(limit));
  state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(limit));
}
BENCHMARK(BM_sieve_count)->Arg(1'000'000)->Arg(10'000'000);

void BM_power_sum_mod(benchmark::State& state) {
  ppnkit::Natural k(47058), n(330), m(47058);
  for (auto _ : state)
    benchmark::DoNotOptimize(ppnkit::power_sum_mod(k, n, m));
}
BENCHMARK(BM_power_sum_mod);

void BM_moser_bound(benchmark::State& state) {
  for (auto _ : state) {
    auto report = ppnkit::moser_bound(33, ppnkit::BoundMode::unconditional);
    benchmark::DoNotOptimize(report.all_confirmed);
  }
}
BENCHMARK(BM_moser_bound);

}  // namespace
