#include <benchmark/benchmark.h>

#include "mcorr/activity.hpp"
#include "mcorr/correlation.hpp"
#include "mcorr/ingest.hpp"
#include "mcorr/pairing.hpp"
#include "mcorr/rng.hpp"
#include "mcorr/simulator.hpp"

namespace {

using namespace mcorr;

SimConfig study_config(int days, int sensors) {
    SimConfig config;
    config.seed = 42;
    config.study_days = days;
    config.n_sensors = sensors;
    config.base_rate = 60.0;
    config.trend = -0.4;
    return config;
}

void bench_activity(benchmark::State& state, Exec exec) {
    const SimulatedFlat sim = simulate_flat(study_config(365, 8));
    const Date begin = sim.ground_truth.front().date;
    const Date end = sim.ground_truth.back().date + 1;
    for (auto _ : state) {
        ActivitySeries series = activity_series(sim.events, sim.flat, begin, end, exec);
        benchmark::DoNotOptimize(series.points.data());
    }
}

void bench_permutation(benchmark::State& state, Exec exec) {
    SplitMix64 rng(7);
    std::vector<double> x(60), y(60);
    for (std::size_t i = 0; i < x.size(); ++i) {
        x[i] = rng.next_double();
        y[i] = 0.4 * x[i] + rng.next_double();
    }
    PermutationPlan plan;
    plan.mode = PermutationPlan::Mode::monte_carlo;
    plan.samples = 200000;
    plan.exec = exec;
    for (auto _ : state) {
        auto p = p_value_permutation(x, y, plan);
        benchmark::DoNotOptimize(p);
    }
}

void bench_cohort(benchmark::State& state, Exec exec) {
    SimConfig config = study_config(180, 4);
    SimulatedStudy study = simulate_study(config, 12);
    StudyDataset dataset =
        apply_exclusions(study.events, study.assessments, study.flats, ExclusionConfig{});
    AnalysisOptions options;
    options.exec = exec;
    for (auto _ : state) {
        auto reports = correlate_all(dataset, options);
        benchmark::DoNotOptimize(reports.data());
    }
}

}  // namespace

BENCHMARK_CAPTURE(bench_activity, serial, mcorr::Exec::serial)->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(bench_activity, parallel, mcorr::Exec::parallel)->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(bench_permutation, serial, mcorr::Exec::serial)->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(bench_permutation, parallel, mcorr::Exec::parallel)->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(bench_cohort, serial, mcorr::Exec::serial)->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(bench_cohort, parallel, mcorr::Exec::parallel)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
