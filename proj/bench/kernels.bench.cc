// Copyright 2026 The LOSR Toolkit Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.


// Serial against OpenMP-parallel variants of the Born-table and yield kernels.

#include <benchmark/benchmark.h>

#include "losr/boxes/functional.h"
#include "losr/exec.h"
#include "losr/monotones/measurement.h"
#include "losr/monotones/yield.h"
#include "losr/quantum/born.h"
#include "losr/quantum/random.h"
#include "losr/quantum/state.h"

namespace {

using losr::Exec;

losr::Exec exec_of(const benchmark::State &state) {
    return state.range(0) == 0 ? Exec::Serial : Exec::Parallel;
}

// Random qubit measurements, `settings` per party.
losr::LocalMeasurements random_measurements(std::size_t parties, int settings, losr::Rng &rng) {
    std::vector<std::vector<Eigen::Vector3d>> v(parties);
    for (auto &party : v) {
        for (int s = 0; s < settings; ++s) {
            party.push_back(losr::random_unit_vector(rng));
        }
    }
    return losr::MeasurementFamily::from_vectors(v).to_local_measurements();
}

void BM_born_box(benchmark::State &state) {
    auto parties = static_cast<std::size_t>(state.range(1));
    losr::Rng rng = losr::make_rng(7, 0);
    losr::PartyDims dims(parties, 2);
    losr::DensityMatrix rho = losr::random_density_matrix(dims, 2, rng);
    losr::LocalMeasurements meas = random_measurements(parties, 3, rng);
    Exec exec = exec_of(state);
    for (auto _ : state) {
        benchmark::DoNotOptimize(losr::born_box(rho, meas, exec));
    }
}
BENCHMARK(BM_born_box)->ArgsProduct({{0, 1}, {2, 3, 4}})->ArgNames({"parallel", "parties"});

void BM_yield_chsh(benchmark::State &state) {
    losr::Rng rng = losr::make_rng(7, 1);
    losr::DensityMatrix rho = losr::random_density_matrix({2, 2}, 2, rng);
    losr::BellFunctional f = losr::BellFunctional::chsh();
    Exec exec = exec_of(state);
    for (auto _ : state) {
        benchmark::DoNotOptimize(losr::optimize_yield(rho, f, 16, 3, exec));
    }
}
BENCHMARK(BM_yield_chsh)->Arg(0)->Arg(1)->ArgNames({"parallel"})->Unit(benchmark::kMillisecond);

void BM_yield_hardy(benchmark::State &state) {
    losr::Rng rng = losr::make_rng(7, 2);
    losr::PureState psi = losr::random_pure_state({2, 2}, rng);
    losr::BellFunctional f = losr::BellFunctional::hardy();
    Exec exec = exec_of(state);
    for (auto _ : state) {
        benchmark::DoNotOptimize(losr::optimize_yield(psi, f, 8, 3, exec));
    }
}
BENCHMARK(BM_yield_hardy)->Arg(0)->Arg(1)->ArgNames({"parallel"})->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
