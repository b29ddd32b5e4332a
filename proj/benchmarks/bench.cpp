#include <benchmark/benchmark.h>

#include "rptrim/baselines.hpp"
#include "rptrim/estimators.hpp"
#include "rptrim/simgen.hpp"
#include "rptrim/trimmer.hpp"

using namespace rptrim;

namespace {

ObservationSet multivariate_sample(int n, int p, double x0) {
    ScenarioSpec spec;
    spec.family = Family::multivariate;
    spec.n = n;
    spec.p = p;
    spec.eps = 0.1;
    spec.x0 = x0;
    RngStream rng(1, "data");
    return gen_multivariate(spec, rng);
}

void BM_select_subsample(benchmark::State& state) {
    const ObservationSet data = multivariate_sample(100, 10, 20.0);
    RTConfig cfg;
    null_gap_quantile(100, cfg.quantile, cfg.null_reps, cfg.maxiter);  // warm cache
    std::uint64_t seed = 0;
    for (auto _ : state) {
        cfg.seed = seed++;
        benchmark::DoNotOptimize(select_subsample(data, cfg));
    }
}
BENCHMARK(BM_select_subsample);

void BM_null_calibration(benchmark::State& state) {
    // vary m so each iteration pays the full calibration cost
    int m = 50;
    for (auto _ : state) {
        benchmark::DoNotOptimize(null_gap_quantile(m, 0.999, 200, 100));
        m = 50 + (m - 49) % 2000;
    }
}
BENCHMARK(BM_null_calibration);

void BM_it_alpha_radii(benchmark::State& state) {
    const ObservationSet data =
        multivariate_sample(static_cast<int>(state.range(0)), 10, 7.0);
    for (auto _ : state)
        benchmark::DoNotOptimize(it_alpha_radii(data, 0.5));
}
BENCHMARK(BM_it_alpha_radii)->Arg(100)->Arg(400);

void BM_weighted_covariance_functional(benchmark::State& state) {
    ScenarioSpec spec;
    spec.family = Family::functional;
    spec.n = 100;
    spec.p = 101;
    spec.eps = 0.1;
    RngStream rng(2, "data");
    const ObservationSet data = gen_functional(spec, rng);
    const std::vector<int> weights(100, 1);
    for (auto _ : state)
        benchmark::DoNotOptimize(weighted_covariance(data, weights));
}
BENCHMARK(BM_weighted_covariance_functional);

void BM_functional_replicate(benchmark::State& state) {
    ScenarioSpec spec;
    spec.family = Family::functional;
    spec.n = 100;
    spec.p = 101;
    spec.eps = 0.1;
    RTConfig cfg;
    std::uint64_t seed = 0;
    for (auto _ : state) {
        RngStream rng = replicate_data_stream(3, static_cast<int>(seed));
        const ObservationSet data = gen_functional(spec, rng);
        cfg.seed = replicate_rt_seed(3, static_cast<int>(seed));
        benchmark::DoNotOptimize(select_subsample(data, cfg));
        ++seed;
    }
}
BENCHMARK(BM_functional_replicate);

}  // namespace

BENCHMARK_MAIN();
