#include <benchmark/benchmark.h>

#include "amalgam/classify.hpp"
#include "amalgam/commensurability.hpp"
#include "amalgam/covers.hpp"
#include "amalgam/geometry.hpp"

using namespace amalgam;

namespace {

SurfaceAmalgamSpec spec23() {
    SurfaceAmalgamSpec s;
    s.g = 2;
    s.h = 2;
    s.m = 2;
    s.n = 3;
    s.curve_a = CurveSpec::non_separating();
    s.curve_b = CurveSpec::non_separating();
    return s;
}

void BM_Classify(benchmark::State& state) {
    auto s = spec23();
    for (auto _ : state) benchmark::DoNotOptimize(obstruction_oracle(s));
}
BENCHMARK(BM_Classify);

void BM_TowerBuild(benchmark::State& state) {
    auto s = spec23();
    for (auto _ : state) benchmark::DoNotOptimize(build_tower_X(s).stages.size());
}
BENCHMARK(BM_TowerBuild);

void BM_TowerVerify(benchmark::State& state) {
    auto t = build_tower_X(spec23());
    for (auto _ : state)
        for (const auto& l : t.links)
            if (l.kind == TowerLink::Kind::Cover)
                benchmark::DoNotOptimize(verify_cover(*l.cover).pass);
}
BENCHMARK(BM_TowerVerify);

void BM_X5IsoZ2(benchmark::State& state) {
    auto s = spec23();
    for (auto _ : state) benchmark::DoNotOptimize(check_X5_iso_Z2(s).has_value());
}
BENCHMARK(BM_X5IsoZ2);

void BM_TreeBall(benchmark::State& state) {
    for (auto _ : state)
        benchmark::DoNotOptimize(biregular_ball(3, 3, static_cast<int>(state.range(0))).size());
}
BENCHMARK(BM_TreeBall)->Arg(6)->Arg(10)->Arg(14);

void BM_TreeCollapse(benchmark::State& state) {
    for (auto _ : state)
        benchmark::DoNotOptimize(collapse_map_tree(2, 10).qmembers.size());
}
BENCHMARK(BM_TreeCollapse);

}  // namespace

BENCHMARK_MAIN();
