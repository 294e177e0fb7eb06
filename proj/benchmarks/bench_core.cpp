// SPDX-License-Identifier: Apache-2.0
//
// crpla: challenge-response physical-layer authentication simulator
// Copyright (C) 2026 crpla project contributors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
// http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
// ------------------------------------------------------------------------

#include <benchmark/benchmark.h>

#include "crpla/auth.hpp"
#include "crpla/channel_map.hpp"
#include "crpla/policy.hpp"
#include "crpla/shadowing.hpp"

namespace {

crpla::GridSpec grid_of(int n) {
    crpla::GridSpec grid;
    grid.n1 = n;
    grid.n2 = n;
    return grid;
}

const crpla::ChannelMap& shared_map(int n) {
    static const crpla::ChannelMap map = [] {
        const auto grid = grid_of(20);
        crpla::ShadowingParams params;
        params.d_coh_m = crpla::default_d_coh_m(grid);
        params.seed = 7;
        return crpla::build_channel_map(grid, params, 10);
    }();
    (void)n;
    return map;
}

void BM_SynthesizeShadowing(benchmark::State& state) {
    const auto grid = grid_of(static_cast<int>(state.range(0)));
    crpla::ShadowingParams params;
    params.d_coh_m = crpla::default_d_coh_m(grid);
    params.seed = 1;
    for (auto _ : state) {
        auto field = crpla::synthesize_shadowing(grid, params);
        benchmark::DoNotOptimize(field.data());
    }
    state.SetItemsProcessed(state.iterations() * grid.size());
}
BENCHMARK(BM_SynthesizeShadowing)->Arg(50)->Arg(128);

void BM_BuildChannelMap(benchmark::State& state) {
    const auto grid = grid_of(static_cast<int>(state.range(0)));
    crpla::ShadowingParams params;
    params.d_coh_m = crpla::default_d_coh_m(grid);
    params.seed = 2;
    for (auto _ : state) {
        auto map = crpla::build_channel_map(grid, params, 10);
        benchmark::DoNotOptimize(map.quantized_db.data());
    }
}
BENCHMARK(BM_BuildChannelMap)->Arg(50);

void BM_ValueIterationSweep(benchmark::State& state) {
    const auto& map = shared_map(20);
    const crpla::EnergyModel model;
    const int sweeps = 5;
    for (auto _ : state) {
        auto table = crpla::solve_value_iteration(map, model, 0.95, 1e-300, sweeps);
        benchmark::DoNotOptimize(table.values.data());
    }
    state.SetItemsProcessed(state.iterations() * sweeps * map.size() * map.num_challenges());
}
BENCHMARK(BM_ValueIterationSweep);

void BM_GreedyQuery(benchmark::State& state) {
    const auto& map = shared_map(20);
    const crpla::EnergyModel model;
    int x = 0;
    std::size_t a = 0;
    for (auto _ : state) {
        const int next =
            crpla::greedy_next(x, map.challenges_db[a % map.challenges_db.size()], map, model);
        benchmark::DoNotOptimize(next);
        x = next;
        ++a;
    }
}
BENCHMARK(BM_GreedyQuery);

void BM_StdQuery(benchmark::State& state) {
    const auto& map = shared_map(20);
    const crpla::EnergyModel model;
    const auto field = crpla::strategic_field(map, 5, 100.0, 20.0);
    int x = 0;
    std::size_t a = 0;
    int t = 1;
    for (auto _ : state) {
        const int next = crpla::std_next(x, map.challenges_db[a % map.challenges_db.size()], t,
                                         field, map, model);
        benchmark::DoNotOptimize(next);
        x = next;
        ++a;
        t = t % 100 + 1;
    }
}
BENCHMARK(BM_StdQuery);

void BM_DetPoint(benchmark::State& state) {
    const double p_fa[] = {0.05};
    auto rng = crpla::make_engine(11);
    for (auto _ : state) {
        auto points = crpla::simulate_det(20.0, p_fa, 1000, rng);
        benchmark::DoNotOptimize(points.data());
    }
    state.SetItemsProcessed(state.iterations() * 2000);
}
BENCHMARK(BM_DetPoint);

} // namespace

BENCHMARK_MAIN();
