#include "flagcone/constructions.hpp"
#include "flagcone/eulerian.hpp"
#include "flagcone/flag_algebra.hpp"
#include "flagcone/functional.hpp"
#include "flagcone/rank8.hpp"
#include "flagcone/validation.hpp"

#include <benchmark/benchmark.h>

#include <random>

using namespace flagcone;

namespace {

GradedPoset random_of_rank(int rank) {
  std::mt19937_64 rng(static_cast<std::uint64_t>(rank) * 7919);
  return random_graded_poset(rank, rng, {4, 0.4});
}

void BM_FlagVectorBoolean(benchmark::State& state) {
  const auto P = boolean_lattice(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(flag_f_vector(P));
  state.counters["elements"] = static_cast<double>(P.size());
}
BENCHMARK(BM_FlagVectorBoolean)->DenseRange(4, 8, 2);

void BM_FlagVectorRandom(benchmark::State& state) {
  const auto P = random_of_rank(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(flag_f_vector(P));
}
BENCHMARK(BM_FlagVectorRandom)->Arg(6)->Arg(10)->Arg(14);

void BM_LVector(benchmark::State& state) {
  const auto F = flag_f_vector(thicken(chain(static_cast<int>(state.range(0))), 2));
  for (auto _ : state) benchmark::DoNotOptimize(l_vector(F, KParam::half()));
}
BENCHMARK(BM_LVector)->Arg(6)->Arg(10)->Arg(14);

void BM_MoebiusTable(benchmark::State& state) {
  const auto P = boolean_lattice(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(moebius_k(P, KParam::one()).full());
}
BENCHMARK(BM_MoebiusTable)->DenseRange(3, 6, 1);

void BM_MoebiusHall(benchmark::State& state) {
  const auto F = flag_f_vector(boolean_lattice(static_cast<int>(state.range(0))));
  for (auto _ : state) benchmark::DoNotOptimize(moebius_k_hall(F, KParam::one()));
}
BENCHMARK(BM_MoebiusHall)->DenseRange(3, 6, 1);

void BM_EulerianDefinition(benchmark::State& state) {
  const auto P = boolean_lattice(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(is_k_eulerian(P, KParam::one()).holds);
}
BENCHMARK(BM_EulerianDefinition)->DenseRange(3, 6, 1);

void BM_Validate(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  LinearFunctional a(n + 1, Basis::F);
  a.set(RankSubset::full(n), 1);
  a.set(RankSubset::of({1}), -1);
  for (auto _ : state) benchmark::DoNotOptimize(validate_functional(a).valid);
}
BENCHMARK(BM_Validate)->DenseRange(3, 8, 1);

void BM_GluedPoset(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(glued_P(static_cast<int>(state.range(0))).size());
}
BENCHMARK(BM_GluedPoset)->DenseRange(1, 5, 2);

void BM_Rank8Certificate(benchmark::State& state) {
  Rank8Options opts;
  opts.corpus_size = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(rank8_certificate(opts).passed());
}
BENCHMARK(BM_Rank8Certificate)->Arg(100)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
