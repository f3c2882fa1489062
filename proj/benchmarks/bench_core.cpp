// SPDX-License-Identifier: Apache-2.0
//
// Copyright (C) 2026 The risq Authors
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
#include "risq/channel.hpp"
#include "risq/config.hpp"
#include "risq/geometry.hpp"
#include "risq/montecarlo.hpp"
#include "risq/phase.hpp"
#include "risq/propagation.hpp"
#include "risq/rng.hpp"

#include <benchmark/benchmark.h>

namespace
{
    using namespace risq;

    struct Scene
    {
        SystemParams params;
        LinkGeometry geom;
        LinkBudget budget;
        RealMatrix phases;

        explicit Scene(std::size_t side)
            : params(system_params(config(side))), geom(make_geometry(layout_spec(config(side)))),
              budget(center_budget(path_loss_model(config(side)), geom, params)),
              phases(los_phases(exact_distances(geom), params.wavelength()))
        {
        }

        static RunConfig config(std::size_t side)
        {
            RunConfig c;
            c.rician_kappa = 4.0;
            c.rows = side;
            c.cols = side;
            c.cascade_gain = CascadeGain::free_space_1m;
            return c;
        }
    };

    void BM_ExactDistances(benchmark::State &state)
    {
        const Scene scene(std::size_t(state.range(0)));
        for (auto _ : state)
            benchmark::DoNotOptimize(exact_distances(scene.geom));
        state.SetItemsProcessed(state.iterations() * state.range(0) * state.range(0));
    }
    BENCHMARK(BM_ExactDistances)->RangeMultiplier(4)->Range(4, 256);

    void BM_SampleChannel(benchmark::State &state)
    {
        const Scene scene(std::size_t(state.range(0)));
        auto rng = RandomStream::for_trial(1, 0);
        for (auto _ : state)
            benchmark::DoNotOptimize(sample_channel(scene.params, scene.budget, scene.phases, rng));
        state.SetItemsProcessed(state.iterations() * state.range(0) * state.range(0));
    }
    BENCHMARK(BM_SampleChannel)->RangeMultiplier(4)->Range(4, 256);

    void BM_Quantize(benchmark::State &state)
    {
        const Scene scene(std::size_t(state.range(0)));
        const auto theta = optimal_phases(scene.phases);
        const QuantizerSpec spec(3);
        for (auto _ : state)
            benchmark::DoNotOptimize(quantize(theta, spec));
        state.SetItemsProcessed(state.iterations() * state.range(0) * state.range(0));
    }
    BENCHMARK(BM_Quantize)->RangeMultiplier(4)->Range(4, 256);

    void BM_EstimateRate(benchmark::State &state)
    {
        const Scene scene(std::size_t(state.range(0)));
        const auto theta = optimal_phases(scene.phases);
        for (auto _ : state)
            benchmark::DoNotOptimize(estimate_rate(scene.params, scene.budget, scene.phases, theta, 1000, 7));
        state.SetItemsProcessed(state.iterations() * 1000);
    }
    BENCHMARK(BM_EstimateRate)->RangeMultiplier(4)->Range(4, 64)->Unit(benchmark::kMillisecond);

} // namespace

BENCHMARK_MAIN();
