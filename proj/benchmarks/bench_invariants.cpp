#include <benchmark/benchmark.h>

#include "zkinv/endo.hpp"
#include "zkinv/sections.hpp"

namespace {

zkinv::BundleSpec example_2_7() { return {2, 7, zkinv::parse_poly("z^-1*u + z*u^2")}; }
zkinv::BundleSpec example_2_6() { return {2, 6, zkinv::parse_poly("z*u")}; }

void bm_width_2_7(benchmark::State& state) {
    auto spec = example_2_7();
    for (auto _ : state) benchmark::DoNotOptimize(zkinv::width(spec));
}
BENCHMARK(bm_width_2_7)->Unit(benchmark::kMillisecond);

void bm_width_2_6(benchmark::State& state) {
    auto spec = example_2_6();
    for (auto _ : state) benchmark::DoNotOptimize(zkinv::width(spec));
}
BENCHMARK(bm_width_2_6)->Unit(benchmark::kMillisecond);

void bm_height_2_7(benchmark::State& state) {
    auto spec = example_2_7();
    for (auto _ : state) benchmark::DoNotOptimize(zkinv::height(spec));
}
BENCHMARK(bm_height_2_7)->Unit(benchmark::kMillisecond);

void bm_h1_end_2_7(benchmark::State& state) {
    auto spec = example_2_7();
    for (auto _ : state) benchmark::DoNotOptimize(zkinv::h1_end(spec));
}
BENCHMARK(bm_h1_end_2_7)->Unit(benchmark::kMillisecond);

void bm_h1_end_oracle_2_6(benchmark::State& state) {
    auto spec = example_2_6();
    for (auto _ : state) benchmark::DoNotOptimize(zkinv::cech_h1_end_oracle(spec));
}
BENCHMARK(bm_h1_end_oracle_2_6)->Unit(benchmark::kMillisecond);

void bm_delta_2_6(benchmark::State& state) {
    auto spec = example_2_6();
    for (auto _ : state) benchmark::DoNotOptimize(zkinv::delta(spec));
}
BENCHMARK(bm_delta_2_6)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
