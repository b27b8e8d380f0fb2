#include <benchmark/benchmark.h>

#include "ybset/ybset.hpp"

namespace {

ybset::MatchedProductSystem worked_example() {
  const auto proj =
      ybset::from_shelf(ybset::OperationTable::from_rows({{0, 0}, {1, 1}}), ybset::ShelfSide::Left);
  const ybset::Permutation swap({1, 0});
  return ybset::MatchedProductSystem::make_unchecked(
      proj, proj, ybset::ActionFamily(2, 2, {swap, swap}), ybset::ActionFamily::identities(2, 2));
}

ybset::MatchedProductSystem dihedral_system() {
  const auto dihedral = ybset::OperationTable::from_rows({{0, 2, 1}, {2, 1, 0}, {1, 0, 2}});
  const auto r = ybset::from_shelf(dihedral, ybset::ShelfSide::Left);
  return ybset::MatchedProductSystem::make_unchecked(r, r, ybset::ActionFamily::identities(3, 3),
                                                     ybset::ActionFamily::identities(3, 3));
}

void BM_CheckSystemGeneral22(benchmark::State& state) {
  const auto sys = worked_example();
  for (auto _ : state) benchmark::DoNotOptimize(ybset::check_system_general(sys));
}
BENCHMARK(BM_CheckSystemGeneral22);

void BM_CheckSystemGeneral33(benchmark::State& state) {
  const auto sys = dihedral_system();
  for (auto _ : state) benchmark::DoNotOptimize(ybset::check_system_general(sys));
}
BENCHMARK(BM_CheckSystemGeneral33);

void BM_BuildMatchedProduct22(benchmark::State& state) {
  const auto sys = worked_example();
  for (auto _ : state) benchmark::DoNotOptimize(ybset::build_matched_product(sys));
}
BENCHMARK(BM_BuildMatchedProduct22);

void BM_EnumerateShelves(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state)
    benchmark::DoNotOptimize(ybset::enumerate_shelves(n, ybset::ShelfSide::Left));
}
BENCHMARK(BM_EnumerateShelves)->Arg(3)->Arg(4);

void BM_EnumerateSolutions2(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(ybset::enumerate_solutions(2));
}
BENCHMARK(BM_EnumerateSolutions2);

void BM_CanonicalForm3(benchmark::State& state) {
  const auto dihedral = ybset::OperationTable::from_rows({{0, 2, 1}, {2, 1, 0}, {1, 0, 2}});
  for (auto _ : state) benchmark::DoNotOptimize(ybset::canonical_form(dihedral));
}
BENCHMARK(BM_CanonicalForm3);

void BM_VerifyEquivalence22(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(ybset::verify_theorem("T3.1", 2, 2));
}
BENCHMARK(BM_VerifyEquivalence22);

void BM_CorrespondenceMax3(benchmark::State& state) {
  for (auto _ : state)
    benchmark::DoNotOptimize(ybset::verify_theorem("S2-correspondence", 3, 0));
}
BENCHMARK(BM_CorrespondenceMax3);

}  // namespace

BENCHMARK_MAIN();
