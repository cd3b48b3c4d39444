#include <benchmark/benchmark.h>

#include "cwr/cohen.hpp"
#include "cwr/sampling.hpp"

namespace {

using namespace cwr;

FieldPtr field_for(int r) { return make_field(2, 1, static_cast<u32>(r)); }

void bm_witt_mul(benchmark::State& state) {
    const u32 m = static_cast<u32>(state.range(0));
    FieldPtr k = field_for(1);
    Rng g(7);
    WittVector x = sample_witt(g, k, m, 1);
    WittVector y = sample_witt(g, k, m, 1);
    for (auto _ : state) benchmark::DoNotOptimize(witt_mul(x, y));
}
BENCHMARK(bm_witt_mul)->Arg(1)->Arg(2)->Arg(3);

void bm_witt_add(benchmark::State& state) {
    const u32 m = static_cast<u32>(state.range(0));
    FieldPtr k = field_for(1);
    Rng g(7);
    WittVector x = sample_witt(g, k, m, 1);
    WittVector y = sample_witt(g, k, m, 1);
    for (auto _ : state) benchmark::DoNotOptimize(witt_add(x, y));
}
BENCHMARK(bm_witt_add)->Arg(1)->Arg(2)->Arg(3);

void bm_lambda_decompose(benchmark::State& state) {
    const u32 m = static_cast<u32>(state.range(0));
    FieldPtr k = field_for(2);
    Rng g(7);
    FieldElem alpha = sample_field_elem(g, k, 2);
    auto basis = canonical_pbasis(k);
    for (auto _ : state) benchmark::DoNotOptimize(lambda_decompose(k, basis, m, alpha));
}
BENCHMARK(bm_lambda_decompose)->Arg(1)->Arg(2);

void bm_digitize(benchmark::State& state) {
    const u32 m = static_cast<u32>(state.range(0));
    FieldPtr k = field_for(1);
    CohenRingModel model = make_model(k, m);
    Rng g(7);
    WittVector x = sample_member(g, model, 1);
    for (auto _ : state) benchmark::DoNotOptimize(digitize(model, x));
}
BENCHMARK(bm_digitize)->Arg(2)->Arg(3);

}  // namespace

BENCHMARK_MAIN();
