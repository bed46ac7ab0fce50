#include <benchmark/benchmark.h>

#include "ppnkit/search.hpp"

namespace {

void BM_search(benchmark::State& state) {
  ppnkit::SearchConfig config;
  config.r_max = static_cast<unsigned>(state.range(0));
  config.value_limit = ppnkit::Natural("2300000000", 10);
  for (auto _ : state) {
    auto outcome = ppnkit::search_ppns(config);
    benchmark::DoNotOptimize(outcome.records.size());
  }
}
BENCHMARK(BM_search)->Arg(4)->Arg(5)->Arg(6);

void BM_search_window_scan_only(benchmark::State& state) {
  ppnkit::SearchConfig config;
  config.r_max = 5;
  config.value_limit = ppnkit::Natural(50000);
  config.two_prime_solve = false;
  for (auto _ : state) {
    auto outcome = ppnkit::search_ppns(config);
    benchmark::DoNotOptimize(outcome.records.size());
  }
}
BENCHMARK(BM_search_window_scan_only);

}  // namespace
