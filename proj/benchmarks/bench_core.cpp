// Microbenchmarks for the exact-geometry hot paths. Inputs are fixed,
// representative desk-scale instances.
#include "lojax/relations.hpp"

#include <benchmark/benchmark.h>

using namespace lojax;

namespace {

MonomialIdeal mi(int n, std::initializer_list<std::initializer_list<int>> gens) {
  std::vector<ZVec> g;
  for (const auto& row : gens) {
    ZVec v;
    for (int c : row) v.push_back(Int(c));
    g.push_back(std::move(v));
  }
  return MonomialIdeal(n, std::move(g));
}

const MonomialIdeal kI2 = mi(2, {{5, 0}, {0, 5}});
const MonomialIdeal kJ2 = mi(2, {{4, 0}, {1, 1}, {0, 4}});
const MonomialIdeal kI3 = mi(3, {{5, 0, 0}, {0, 5, 0}, {0, 0, 5}, {1, 1, 1}});
const MonomialIdeal kJ3 = mi(3, {{2, 0, 0}, {0, 3, 0}, {0, 0, 4}});
const MonomialIdeal kBig3 =
    mi(3, {{6, 0, 0}, {0, 7, 0}, {0, 0, 5}, {2, 1, 1}, {1, 3, 0}, {0, 2, 3}});

void BM_UpwardHull(benchmark::State& state) {
  std::vector<QVec> pts;
  for (const auto& g : kBig3.generators()) pts.push_back(to_qvec(g));
  for (auto _ : state) benchmark::DoNotOptimize(upward_hull(3, pts));
}
BENCHMARK(BM_UpwardHull);

void BM_CompactFaces(benchmark::State& state) {
  auto dd = upward_hull_of(kBig3);
  for (auto _ : state) benchmark::DoNotOptimize(enumerate_compact_faces(dd));
}
BENCHMARK(BM_CompactFaces);

void BM_Covolume(benchmark::State& state) {
  auto p = newton_polyhedron(kBig3);
  for (auto _ : state) benchmark::DoNotOptimize(covolume(p));
}
BENCHMARK(BM_Covolume);

void BM_MixedSequence2(benchmark::State& state) {
  for (auto _ : state)
    benchmark::DoNotOptimize(mixed_sequence(kI2, kJ2, /*cross_check=*/false));
}
BENCHMARK(BM_MixedSequence2);

void BM_MixedSequence3(benchmark::State& state) {
  for (auto _ : state)
    benchmark::DoNotOptimize(mixed_sequence(kI3, kJ3, /*cross_check=*/false));
}
BENCHMARK(BM_MixedSequence3);

void BM_LojaSequence(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(loja_sequence(kI3, kJ3));
}
BENCHMARK(BM_LojaSequence);

void BM_FiltrationIdeal(benchmark::State& state) {
  auto f = build_filtration(kJ3);
  for (auto _ : state) benchmark::DoNotOptimize(filtration_ideal(f, Int(24)));
}
BENCHMARK(BM_FiltrationIdeal);

void BM_KIdeals(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(build_K_ideals(kI2, kJ2));
}
BENCHMARK(BM_KIdeals);

}  // namespace

BENCHMARK_MAIN();
