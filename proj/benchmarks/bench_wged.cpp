#include <benchmark/benchmark.h>

#include <cstdint>
#include <vector>

#include "wged/datasets.hpp"
#include "wged/distribution.hpp"
#include "wged/estimation.hpp"
#include "wged/gof.hpp"
#include "wged/models.hpp"

namespace {

const wged::Params kParams(56.881, 4.893, 0.222);

wged::mle::Sample glass() {
    return wged::mle::make_sample(wged::datasets::glass_fibre());
}

void BM_Pdf(benchmark::State& state) {
    double x = 0.5;
    for (auto _ : state) {
        benchmark::DoNotOptimize(wged::pdf(kParams, x));
        x = x < 2.0 ? x + 0.001 : 0.5;
    }
}
BENCHMARK(BM_Pdf);

void BM_Cdf(benchmark::State& state) {
    double x = 0.5;
    for (auto _ : state) {
        benchmark::DoNotOptimize(wged::cdf(kParams, x));
        x = x < 2.0 ? x + 0.001 : 0.5;
    }
}
BENCHMARK(BM_Cdf);

void BM_Quantile(benchmark::State& state) {
    double q = 0.01;
    for (auto _ : state) {
        benchmark::DoNotOptimize(wged::quantile(kParams, q));
        q = q < 0.99 ? q + 0.001 : 0.01;
    }
}
BENCHMARK(BM_Quantile);

void BM_Sample(benchmark::State& state) {
    const std::size_t n = static_cast<std::size_t>(state.range(0));
    std::uint64_t seed = 1;
    for (auto _ : state) {
        benchmark::DoNotOptimize(wged::sample(kParams, n, seed++));
    }
    state.SetItemsProcessed(state.iterations() * static_cast<int64_t>(n));
}
BENCHMARK(BM_Sample)->Arg(1000)->Arg(100000);

void BM_RawMomentQuadrature(benchmark::State& state) {
    for (auto _ : state) {
        benchmark::DoNotOptimize(wged::raw_moment(kParams, 2));
    }
}
BENCHMARK(BM_RawMomentQuadrature);

void BM_LogLikelihood(benchmark::State& state) {
    const wged::mle::Sample s = glass();
    for (auto _ : state) {
        benchmark::DoNotOptimize(wged::mle::log_likelihood(kParams, s));
    }
}
BENCHMARK(BM_LogLikelihood);

void BM_Score(benchmark::State& state) {
    const wged::mle::Sample s = glass();
    for (auto _ : state) {
        benchmark::DoNotOptimize(wged::mle::score(kParams, s));
    }
}
BENCHMARK(BM_Score);

void BM_ObservedInformation(benchmark::State& state) {
    const wged::mle::Sample s = glass();
    for (auto _ : state) {
        benchmark::DoNotOptimize(wged::mle::observed_information(kParams, s));
    }
}
BENCHMARK(BM_ObservedInformation);

void BM_FitMle(benchmark::State& state) {
    const wged::mle::Sample s = glass();
    for (auto _ : state) {
        benchmark::DoNotOptimize(wged::mle::fit_mle(s));
    }
}
BENCHMARK(BM_FitMle)->Unit(benchmark::kMillisecond);

void BM_CompetitorFits(benchmark::State& state) {
    const wged::mle::Sample s = glass();
    const wged::models::Kind kind = static_cast<wged::models::Kind>(state.range(0));
    for (auto _ : state) {
        benchmark::DoNotOptimize(wged::models::fit(kind, s));
    }
    state.SetLabel(wged::models::kind_name(kind));
}
BENCHMARK(BM_CompetitorFits)
    ->Arg(static_cast<int>(wged::models::Kind::ED))
    ->Arg(static_cast<int>(wged::models::Kind::GED))
    ->Arg(static_cast<int>(wged::models::Kind::BED))
    ->Arg(static_cast<int>(wged::models::Kind::BGED))
    ->Unit(benchmark::kMillisecond);

void BM_KsExactPvalue(benchmark::State& state) {
    const std::size_t n = static_cast<std::size_t>(state.range(0));
    for (auto _ : state) {
        benchmark::DoNotOptimize(
            wged::gof::ks_pvalue(0.127366, n, wged::gof::PvalueMethod::exact));
    }
}
BENCHMARK(BM_KsExactPvalue)->Arg(63)->Arg(500);

void BM_KsStatistic(benchmark::State& state) {
    const wged::mle::Sample s = glass();
    for (auto _ : state) {
        benchmark::DoNotOptimize(
            wged::gof::ks_statistic(s, [](double x) { return wged::cdf(kParams, x); }));
    }
}
BENCHMARK(BM_KsStatistic);

}  // namespace

BENCHMARK_MAIN();
