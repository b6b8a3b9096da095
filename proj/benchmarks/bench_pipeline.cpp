// Copyright (c) cascopt contributors.
// SPDX-License-Identifier: Apache-2.0
#include <benchmark/benchmark.h>

#include "cascopt/instances.hpp"
#include "cascopt/preprocess.hpp"

using namespace cascopt;

namespace {

Instance bench_instance(uint32_t patches, int horizon) {
    SpatialParams params;
    params.n_patches = patches;
    params.n_parcels = patches / 10;
    params.horizon = horizon;
    params.seed = 99;
    return layered_graph(spatial_metapop(params));
}

void BM_SampleCascade(benchmark::State& state) {
    Instance inst = bench_instance(static_cast<uint32_t>(state.range(0)), 10);
    int32_t k = 0;
    for (auto _ : state) {
        benchmark::DoNotOptimize(sample_cascade(inst, k++, 1));
    }
}
BENCHMARK(BM_SampleCascade)->Arg(100)->Arg(200);

void BM_Reduce(benchmark::State& state) {
    Instance inst = bench_instance(static_cast<uint32_t>(state.range(0)), 10);
    CascadeSample sample = sample_cascade(inst, 0, 1);
    for (auto _ : state) {
        benchmark::DoNotOptimize(reduce(sample));
    }
}
BENCHMARK(BM_Reduce)->Arg(100)->Arg(200);

void BM_EvaluateRaw(benchmark::State& state) {
    Instance inst = bench_instance(200, 10);
    CascadeSample sample = sample_cascade(inst, 0, 1);
    Strategy y = empty_strategy(inst.num_actions());
    for (ActionId l = 0; l < inst.num_actions(); l += 2) y.purchased[l] = 1;
    for (auto _ : state) {
        benchmark::DoNotOptimize(evaluate_on_sample(sample, y));
    }
}
BENCHMARK(BM_EvaluateRaw);

void BM_EvaluateReduced(benchmark::State& state) {
    Instance inst = bench_instance(200, 10);
    ReducedCascade reduced = reduce(sample_cascade(inst, 0, 1));
    Strategy y = empty_strategy(inst.num_actions());
    for (ActionId l = 0; l < inst.num_actions(); l += 2) y.purchased[l] = 1;
    for (auto _ : state) {
        benchmark::DoNotOptimize(evaluate_on_sample(reduced, y));
    }
}
BENCHMARK(BM_EvaluateReduced);

void BM_CommitAction(benchmark::State& state) {
    Instance inst = bench_instance(200, 10);
    ReducedCascade reduced = reduce(sample_cascade(inst, 0, 1));
    for (auto _ : state) {
        benchmark::DoNotOptimize(commit_action(reduced, 0));
    }
}
BENCHMARK(BM_CommitAction);

}  // namespace

BENCHMARK_MAIN();
