#include "clic/calibrate.hpp"
#include "clic/complexity.hpp"
#include "clic/io.hpp"
#include "clic/partition.hpp"
#include "clic/pipeline.hpp"
#include "clic/scenario.hpp"

#include <benchmark/benchmark.h>

#include <random>

using namespace clic;

namespace {

Portfolio synthetic_portfolio(std::size_t workloads, std::size_t windows) {
    std::mt19937_64 rng(42);
    std::uniform_real_distribution<double> demand(0.0, 1.0);
    const char* industries[] = {"retail", "finance", "healthcare", "airline"};
    Portfolio p;
    p.schedule.clear();
    for (std::size_t w = 0; w < windows; ++w) p.schedule.push_back("w" + std::to_string(w));
    for (std::size_t i = 0; i < workloads; ++i) {
        Workload wl;
        wl.id = "wl-" + std::to_string(i);
        wl.industry = industries[i % 4];
        wl.isolation_demand = demand(rng);
        wl.control_demand = demand(rng);
        if (i % 3 == 0)
            for (std::size_t w = 1; w < windows; w += 2)
                wl.overrides.push_back({p.schedule[w], demand(rng), demand(rng), {}});
        p.workloads.push_back(std::move(wl));
    }
    return p;
}

void BM_HybridComplexity(benchmark::State& state) {
    const QuadrantCounts c{4, 3, 5, 2};
    double d = 6.0;
    for (auto _ : state) {
        benchmark::DoNotOptimize(hybrid_complexity(c, d));
        benchmark::ClobberMemory();
    }
}
BENCHMARK(BM_HybridComplexity);

void BM_BuildPlan(benchmark::State& state) {
    const auto p = synthetic_portfolio(static_cast<std::size_t>(state.range(0)), 4);
    const auto reg = IndustryRegistry::defaults();
    for (auto _ : state) benchmark::DoNotOptimize(build_plan(p, reg));
    state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_BuildPlan)->Arg(100)->Arg(1000)->Arg(10000);

void BM_Pipeline(benchmark::State& state) {
    const auto p = synthetic_portfolio(static_cast<std::size_t>(state.range(0)), 4);
    const auto reg = IndustryRegistry::defaults();
    const auto prov = ProviderProfile::defaults();
    EstimateOptions o;
    o.settings.engagement.y = 0.5;
    for (auto _ : state) benchmark::DoNotOptimize(save_report(estimate_pipeline(p, reg, prov, o)));
    state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_Pipeline)->Arg(100)->Arg(1000);

void BM_WhatIf(benchmark::State& state) {
    const auto p = synthetic_portfolio(1000, 4);
    const auto reg = IndustryRegistry::defaults();
    const auto prov = ProviderProfile::defaults();
    const std::vector<Move> moves{{"wl-1", "w0", Quadrant::Q3}, {"wl-2", "w1", Quadrant::Q2}};
    for (auto _ : state) benchmark::DoNotOptimize(what_if(p, reg, prov, EvaluationSettings{}, moves));
}
BENCHMARK(BM_WhatIf);

void BM_EstimateDeltaW(benchmark::State& state) {
    EffortCurve c;
    for (std::int64_t w = 1; w <= state.range(0); ++w)
        c.points.push_back({w, 100.0 * static_cast<double>(w) / (static_cast<double>(w) + state.range(0) / 2.0)});
    const PlateauParams p{0.001, 3};
    for (auto _ : state) {
        try {
            benchmark::DoNotOptimize(estimate_delta_w(c, p));
        } catch (const Error&) {
        }
    }
}
BENCHMARK(BM_EstimateDeltaW)->Arg(16)->Arg(1024)->Arg(65536);

} // namespace

BENCHMARK_MAIN();
