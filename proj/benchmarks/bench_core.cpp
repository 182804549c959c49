// Microbenchmarks for the hot paths: exact abundancy, interval logs,
// decision escalation, candidate enumeration, and the record scan.

#include <benchmark/benchmark.h>

#include "gronwall/criteria.hpp"
#include "gronwall/factored.hpp"
#include "gronwall/interval.hpp"
#include "gronwall/sa.hpp"
#include "gronwall/table_reference.hpp"

namespace {

gw::FactoredInteger deep_row() {
  // The largest reference row (Omega = 90, 146 decimal digits).
  const auto* row =
      gw::reference::find_row(90, gw::reference::Edition::Corrected);
  return gw::FactoredInteger::parse(row->factorization);
}

void BM_sigma_over_n(benchmark::State& state) {
  auto n = deep_row();
  for (auto _ : state) benchmark::DoNotOptimize(n.sigma_over_n());
}
BENCHMARK(BM_sigma_over_n);

void BM_log_n(benchmark::State& state) {
  auto n = deep_row();
  auto bits = static_cast<gw::Precision>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(gw::log_n(n, bits));
}
BENCHMARK(BM_log_n)->Arg(128)->Arg(1024);

void BM_robin_decision(benchmark::State& state) {
  auto n = gw::FactoredInteger::parse("2^4*3^2*5*7");
  gw::DecisionConfig cfg;
  for (auto _ : state) benchmark::DoNotOptimize(gw::robin_compare(n, cfg));
}
BENCHMARK(BM_robin_decision);

void BM_candidate_stream(benchmark::State& state) {
  for (auto _ : state) {
    gw::CandidateStream stream(60.0);
    std::uint64_t count = 0;
    while (stream.next()) ++count;
    benchmark::DoNotOptimize(count);
  }
}
BENCHMARK(BM_candidate_stream);

void BM_record_scan(benchmark::State& state) {
  for (auto _ : state) {
    auto list = gw::sa_list(120.0);
    benchmark::DoNotOptimize(list.records.size());
  }
}
BENCHMARK(BM_record_scan);

}  // namespace

BENCHMARK_MAIN();
