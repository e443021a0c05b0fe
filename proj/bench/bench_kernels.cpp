// Serial reference vs OpenMP kernel on the same inputs.

#include <benchmark/benchmark.h>

#include "bruck/group_algos.hpp"
#include "bruck/loop.hpp"
#include "bruck/pgl.hpp"
#include "bruck/search.hpp"
#include "corpus.hpp"

using namespace bruck;

namespace {

const Loop& bol_input() {
  static const Loop x = direct_product(testing::glauberman27(), testing::elementary_abelian_loop(2));
  return x;
}

const PermGroup& group_input() {
  static const PermGroup g = build_pgl2(17).group;  // order 4896
  return g;
}

SearchSpec search_input() {
  SearchSpec s;
  s.order = 8;
  s.require_bol = true;
  s.require_exponent2 = true;
  return s;
}

void BM_BolSerial(benchmark::State& st) {
  for (auto _ : st) benchmark::DoNotOptimize(serial::bol_violation(bol_input()));
}
void BM_BolParallel(benchmark::State& st) {
  for (auto _ : st) benchmark::DoNotOptimize(bol_violation(bol_input()));
}

void BM_ElementsSerial(benchmark::State& st) {
  for (auto _ : st) benchmark::DoNotOptimize(serial::enumerate_elements(group_input()));
}
void BM_ElementsParallel(benchmark::State& st) {
  for (auto _ : st) benchmark::DoNotOptimize(enumerate_elements(group_input()));
}

void BM_ConjugationSerial(benchmark::State& st) {
  const std::vector<Perm> els = enumerate_elements(group_input());
  for (auto _ : st) benchmark::DoNotOptimize(serial::conjugation_table(group_input(), els, group_input().generators()));
}
void BM_ConjugationParallel(benchmark::State& st) {
  const std::vector<Perm> els = enumerate_elements(group_input());
  for (auto _ : st) benchmark::DoNotOptimize(conjugation_table(group_input(), els, group_input().generators()));
}

void BM_SearchSerial(benchmark::State& st) {
  for (auto _ : st) benchmark::DoNotOptimize(serial::enumerate_loops(search_input()));
}
void BM_SearchParallel(benchmark::State& st) {
  for (auto _ : st) benchmark::DoNotOptimize(enumerate_loops(search_input()));
}

}  // namespace

BENCHMARK(BM_BolSerial)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_BolParallel)->Unit(benchmark::kMillisecond)->UseRealTime();
BENCHMARK(BM_ElementsSerial)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_ElementsParallel)->Unit(benchmark::kMillisecond)->UseRealTime();
BENCHMARK(BM_ConjugationSerial)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_ConjugationParallel)->Unit(benchmark::kMillisecond)->UseRealTime();
BENCHMARK(BM_SearchSerial)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_SearchParallel)->Unit(benchmark::kMillisecond)->UseRealTime();

BENCHMARK_MAIN();
