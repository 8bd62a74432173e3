// Microbenchmarks for the hot paths: Monte Carlo p-value estimation, the
// exact dynamic program, name-pool construction and q-value computation.
#include <benchmark/benchmark.h>

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "namescan/multiplicity.hpp"
#include "namescan/rng.hpp"
#include "namescan/scarcity.hpp"
#include "namescan/synthlab.hpp"

namespace {

// Synthetic roster shared by the benchmarks; built once.
const namescan::Roster& bench_roster(std::int64_t n_people) {
  static std::map<std::int64_t, namescan::Roster> cache;
  auto it = cache.find(n_people);
  if (it == cache.end()) {
    namescan::SynthConfig cfg;
    cfg.n_people = n_people;
    cfg.n_groups = 20;
    cfg.name_law = namescan::ZipfLaw{1.07, 50000};
    cfg.seed = 7;
    it = cache.emplace(n_people, namescan::generate(cfg)).first;
  }
  return it->second;
}

void BM_McPvalue(benchmark::State& state) {
  const std::int64_t pool_size = state.range(0);
  const std::int64_t n_sims = state.range(1);
  const namescan::Roster& roster = bench_roster(pool_size);
  const namescan::NamePool pool(roster.names());
  const std::vector<std::string> names = roster.group_names("G01");
  const auto n = static_cast<std::int64_t>(names.size());
  const auto l = static_cast<std::int64_t>(namescan::distinct_count(names));

  namescan::TestConfig cfg;
  cfg.n_sims = n_sims;
  cfg.min_group_size = 1;
  cfg.seed = 99;
  for (auto _ : state) {
    const namescan::ScarcityResult res = namescan::mc_pvalue(pool, n, l, cfg);
    benchmark::DoNotOptimize(res.n_leq);
  }
  state.SetItemsProcessed(state.iterations() * n_sims);
}
BENCHMARK(BM_McPvalue)
    ->Args({2000, 1000})
    ->Args({10000, 1000})
    ->Args({60000, 1000})
    ->Unit(benchmark::kMillisecond);

void BM_McPvalueWorkers(benchmark::State& state) {
  const namescan::Roster& roster = bench_roster(60000);
  const namescan::NamePool pool(roster.names());
  const std::vector<std::string> names = roster.group_names("G01");
  const auto n = static_cast<std::int64_t>(names.size());
  const auto l = static_cast<std::int64_t>(namescan::distinct_count(names));

  namescan::TestConfig cfg;
  cfg.n_sims = 10000;
  cfg.min_group_size = 1;
  cfg.seed = 99;
  cfg.workers = static_cast<int>(state.range(0));
  for (auto _ : state) {
    const namescan::ScarcityResult res = namescan::mc_pvalue(pool, n, l, cfg);
    benchmark::DoNotOptimize(res.n_leq);
  }
  state.SetItemsProcessed(state.iterations() * cfg.n_sims);
}
BENCHMARK(BM_McPvalueWorkers)->Arg(1)->Arg(2)->Arg(4)->Arg(8)->Unit(
    benchmark::kMillisecond);

void BM_ExactDistribution(benchmark::State& state) {
  // Pool with the configured number of distinct names, multiplicity ~ 1/rank.
  const std::int64_t k = state.range(0);
  std::vector<std::int64_t> mult;
  for (std::int64_t j = 1; j <= k; ++j)
    mult.push_back(std::max<std::int64_t>(1, (4 * k) / j));
  for (auto _ : state) {
    const std::vector<double> dist =
        namescan::exact_distinct_distribution(mult, 60);
    benchmark::DoNotOptimize(dist.data());
  }
}
BENCHMARK(BM_ExactDistribution)->Arg(16)->Arg(32)->Arg(64)->Unit(
    benchmark::kMillisecond);

void BM_NamePoolBuild(benchmark::State& state) {
  const namescan::Roster& roster = bench_roster(state.range(0));
  const std::vector<std::string> names = roster.names();
  for (auto _ : state) {
    const namescan::NamePool pool(names);
    benchmark::DoNotOptimize(pool.distinct());
  }
  state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_NamePoolBuild)->Arg(10000)->Arg(60000)->Unit(
    benchmark::kMillisecond);

void BM_QValues(benchmark::State& state) {
  const std::size_t m = static_cast<std::size_t>(state.range(0));
  namescan::rng::Xoshiro256ss gen(5);
  std::vector<double> p(m);
  for (double& v : p) v = 1.0 - gen.next_double();

  namescan::QValueOptions opts;
  opts.seed = 11;
  for (auto _ : state) {
    const namescan::QValueReport report = namescan::qvalues(p, opts);
    benchmark::DoNotOptimize(report.pi0_hat);
  }
}
BENCHMARK(BM_QValues)->Arg(20)->Arg(200)->Arg(2000);

}  // namespace

BENCHMARK_MAIN();
