#include <benchmark/benchmark.h>

#include "coinbound/closed_form.hpp"
#include "coinbound/oracle.hpp"
#include "coinbound/representation.hpp"

using namespace coinbound;

namespace {

GeneralInstance bench_instance(Int scale) {
  // (m, n) = (97, 101) with bounds proportional to scale.
  return GeneralInstance(make_instance(97, 101, scale * 101, scale * 97));
}

void BM_ReachableShiftOr(benchmark::State& state) {
  const GeneralInstance g = bench_instance(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(reachable_set(g, {.strategy = DpStrategy::ShiftOr}));
  }
  state.SetItemsProcessed(state.iterations() * (g.total() + 1));
}

void BM_ReachableBinarySplit(benchmark::State& state) {
  const GeneralInstance g = bench_instance(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(reachable_set(g, {.strategy = DpStrategy::BinarySplit}));
  }
  state.SetItemsProcessed(state.iterations() * (g.total() + 1));
}

void BM_CountClosedForm(benchmark::State& state) {
  const auto inst = make_instance(97, 101, state.range(0) * 101, state.range(0) * 97);
  for (auto _ : state) benchmark::DoNotOptimize(count_representable(inst));
}

void BM_FindRepresentation(benchmark::State& state) {
  const auto inst = make_instance(97, 101, state.range(0) * 101, state.range(0) * 97);
  Int s = 0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(find_representation(inst, s));
    s = (s + 7919) % (inst.total() + 1);
  }
}

void BM_FindRepresentationIterative(benchmark::State& state) {
  const auto inst = make_instance(97, 101, state.range(0) * 101, state.range(0) * 97);
  Int s = 0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(find_representation_iterative(inst, s));
    s = (s + 7919) % (inst.total() + 1);
  }
}

}  // namespace

BENCHMARK(BM_ReachableShiftOr)->Arg(1)->Arg(4)->Arg(16);
BENCHMARK(BM_ReachableBinarySplit)->Arg(1)->Arg(4)->Arg(16)->Arg(64);
BENCHMARK(BM_CountClosedForm)->Arg(1)->Arg(1 << 20);
BENCHMARK(BM_FindRepresentation)->Arg(1)->Arg(1 << 10);
BENCHMARK(BM_FindRepresentationIterative)->Arg(1)->Arg(1 << 10);

BENCHMARK_MAIN();
