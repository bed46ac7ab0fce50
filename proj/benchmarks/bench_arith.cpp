#include <benchmark/benchmark.h>

#include "ppnkit/arith.hpp"

namespace {

void BM_is_prime_u64(benchmark::State& state) {
  std::uint64_t n = 1729101023519ULL;
  for (auto _ : state) benchmark::DoNotOptimize(ppnkit::is_prime_u64(n));
}
BENCHMARK(BM_is_prime_u64);

void BM_is_prime_bpsw(benchmark::State& state) {
  ppnkit::Natural n("43572628606668095873923", 10);
  for (auto _ : state) benchmark::DoNotOptimize(ppnkit::is_prime(n));
}
BENCHMARK(BM_is_prime_bpsw);

void BM_factorize_k6_squared_plus_1(benchmark::State& state) {
  ppnkit::Natural n = ppnkit::Natural("2214502422", 10);
  n = n * n + 1;
  for (auto _ : state) benchmark::DoNotOptimize(ppnkit::factorize(n));
}
BENCHMARK(BM_factorize_k6_squared_plus_1);

void BM_factorize_table_row_8(benchmark::State& state) {
  ppnkit::Natural n("8490421583559688410706771261086", 10);
  for (auto _ : state) benchmark::DoNotOptimize(ppnkit::factorize(n));
}
BENCHMARK(BM_factorize_table_row_8);

}  // namespace
