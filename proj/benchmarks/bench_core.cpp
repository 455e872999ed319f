#include <benchmark/benchmark.h>

#include "abelian/code.hpp"
#include "abelian/fourier.hpp"
#include "abelian/shift.hpp"
#include "abelian/uncertainty.hpp"

using namespace abelian;

namespace {

CharSet z7z7_defining_zeros() {
  GroupSpec g = make_group({7, 7});
  return CharSet(g, {GElem{0, 0}, GElem{0, 1}, GElem{0, 3}, GElem{1, 0}, GElem{3, 0}, GElem{1, 1},
                     GElem{1, 2}, GElem{1, 4}, GElem{3, 3}, GElem{3, 5}, GElem{3, 6}});
}

void BM_FourierTransform49(benchmark::State& state) {
  CharSet zeros = z7z7_defining_zeros();
  FieldCtx f2 = build_field(2, 7);
  GAlgElem f = code_from_zeros(zeros.group(), f2, zeros).basis().front();
  for (auto _ : state) {
    benchmark::DoNotOptimize(fourier_transform(f));
  }
}
BENCHMARK(BM_FourierTransform49);

void BM_ConvolveZ7Z7(benchmark::State& state) {
  CharSet zeros = z7z7_defining_zeros();
  FieldCtx f2 = build_field(2, 7);
  GAlgElem f = code_from_zeros(zeros.group(), f2, zeros).basis().front();
  for (auto _ : state) {
    benchmark::DoNotOptimize(convolve(f, f));
  }
}
BENCHMARK(BM_ConvolveZ7Z7);

void BM_CodeFromZerosZ7Z7(benchmark::State& state) {
  CharSet zeros = z7z7_defining_zeros();
  FieldCtx f2 = build_field(2, 7);
  for (auto _ : state) {
    benchmark::DoNotOptimize(code_from_zeros(zeros.group(), f2, zeros));
  }
}
BENCHMARK(BM_CodeFromZerosZ7Z7);

void BM_MinWeightHamming15(benchmark::State& state) {
  GroupSpec g = make_group({15});
  FieldCtx f2 = build_field(2, 15);
  AbelianCode code = code_from_zeros(g, f2, CharSet(g, {GElem{1}}));
  for (auto _ : state) {
    benchmark::DoNotOptimize(min_weight_brute(code));
  }
}
BENCHMARK(BM_MinWeightHamming15);

void BM_MinWeightZ7Z7(benchmark::State& state) {
  CharSet zeros = z7z7_defining_zeros();
  FieldCtx f2 = build_field(2, 7);
  AbelianCode code = code_from_zeros(zeros.group(), f2, zeros);
  for (auto _ : state) {
    benchmark::DoNotOptimize(min_weight_brute(code));
  }
}
BENCHMARK(BM_MinWeightZ7Z7);

void BM_GreedyDelta49(benchmark::State& state) {
  CharSet closed = f_closure(z7z7_defining_zeros(), build_field(2, 7));
  for (auto _ : state) {
    benchmark::DoNotOptimize(greedy_delta(closed, 1));
  }
}
BENCHMARK(BM_GreedyDelta49);

void BM_ExactDeltaZ12(benchmark::State& state) {
  GroupSpec g = make_group({12});
  std::vector<GElem> zs;
  for (std::int64_t i : {0, 1, 3, 4, 6, 8, 9}) zs.push_back(GElem{i});
  CharSet z(g, zs);
  for (auto _ : state) {
    benchmark::DoNotOptimize(exact_delta(z));
  }
}
BENCHMARK(BM_ExactDeltaZ12);

void BM_SignScanZ6(benchmark::State& state) {
  GroupSpec g = make_group({6});
  for (auto _ : state) {
    benchmark::DoNotOptimize(scan_sign_patterns(g));
  }
}
BENCHMARK(BM_SignScanZ6);

}  // namespace

BENCHMARK_MAIN();
