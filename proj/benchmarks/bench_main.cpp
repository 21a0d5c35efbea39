// csa-sim: simulation and analysis toolkit for channel static antennas
// Copyright (C) 2026 The csa-sim authors
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

#include <vector>

#include "csa/analysis.hpp"
#include "csa/experiment.hpp"
#include "csa/field.hpp"
#include "csa/kinematics.hpp"
#include "csa/rng.hpp"
#include "csa/stat_model.hpp"
#include "csa/trace_io.hpp"

namespace {

csa::field::FieldModel bench_field(std::size_t paths) {
    csa::field::FieldParams params;
    params.num_paths = paths;
    params.seed = 1;
    return csa::field::synthesize_field(params);
}

void BM_EvalChannel(benchmark::State& state) {
    const auto field = bench_field(static_cast<std::size_t>(state.range(0)));
    double x = 0.0;
    for (auto _ : state) {
        benchmark::DoNotOptimize(csa::field::eval_channel(field, x));
        x += 0.01;
    }
    state.SetItemsProcessed(state.iterations());
}
BENCHMARK(BM_EvalChannel)->Arg(64)->Arg(256)->Arg(4096);

void BM_RunModeCsa(benchmark::State& state) {
    const auto field = bench_field(256);
    const auto traj = csa::kinematics::linear_trajectory(6.0, 0.05);
    const csa::kinematics::AntennaMount mount{0.5, 0.5, 0.0};
    for (auto _ : state) {
        benchmark::DoNotOptimize(
            csa::experiment::run_mode(field, traj, mount, csa::Mode::csa, 0.0, 1));
    }
}
BENCHMARK(BM_RunModeCsa);

void BM_GenerateModelTrace(benchmark::State& state) {
    csa::model::PiecewiseStaticModel model;
    model.initial_dist = csa::model::RiceDist{2.0, 1.0};
    model.residual_sigma = 0.02;
    model.seed = 1;
    for (auto _ : state) {
        benchmark::DoNotOptimize(csa::model::generate_model_trace(model, 6.0, 0.05));
    }
}
BENCHMARK(BM_GenerateModelTrace);

void BM_EstimateRiceK(benchmark::State& state) {
    csa::Rng rng(1);
    std::vector<double> magnitudes(static_cast<std::size_t>(state.range(0)));
    for (auto& r : magnitudes) {
        r = std::abs(rng.circular_normal(1.0));
    }
    for (auto _ : state) {
        benchmark::DoNotOptimize(csa::analysis::estimate_rice_k(magnitudes));
    }
    state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_EstimateRiceK)->Arg(1000)->Arg(100000);

void BM_SegmentStatic(benchmark::State& state) {
    csa::model::PiecewiseStaticModel model;
    model.initial_dist = csa::model::RiceDist{0.0, 1.0};
    model.residual_sigma = 0.01;
    model.seed = 1;
    const csa::ChannelTrace trace = csa::model::generate_model_trace(model, 50.0, 0.005);
    for (auto _ : state) {
        benchmark::DoNotOptimize(csa::analysis::segment_static(trace, 0.05));
    }
    state.SetItemsProcessed(state.iterations() * trace.samples.size());
}
BENCHMARK(BM_SegmentStatic);

void BM_TraceToCsv(benchmark::State& state) {
    const auto field = bench_field(256);
    const auto traj = csa::kinematics::linear_trajectory(6.0, 0.01);
    const csa::kinematics::AntennaMount mount{0.5, 0.5, 0.0};
    const auto trace = csa::experiment::run_mode(field, traj, mount, csa::Mode::regular, 0.0, 1);
    for (auto _ : state) {
        benchmark::DoNotOptimize(csa::io::trace_to_csv(trace));
    }
    state.SetBytesProcessed(state.iterations() * csa::io::trace_to_csv(trace).size());
}
BENCHMARK(BM_TraceToCsv);

}  // namespace

BENCHMARK_MAIN();
