#include <benchmark/benchmark.h>

#include "zetamde/dirichlet.hpp"
#include "zetamde/lerch.hpp"
#include "zetamde/zeta.hpp"

namespace {

using namespace zetamde;

void BM_zeta(benchmark::State& state) {
    int digits = static_cast<int>(state.range(0));
    double t = static_cast<double>(state.range(1));
    EvalContext ctx = EvalContext::make(digits);
    Complex s(Real(0.6, ctx.working_bits), Real(t, ctx.working_bits));
    for (auto _ : state) {
        EvalResult r = zeta(s, ctx);
        benchmark::DoNotOptimize(r.value.re().to_double());
    }
}
BENCHMARK(BM_zeta)
    ->Args({50, 10000})
    ->Args({50, 1000000})
    ->Args({100, 1000000})
    ->Args({300, 1000000})
    ->Unit(benchmark::kMillisecond);

void BM_lerch(benchmark::State& state) {
    int digits = static_cast<int>(state.range(0));
    double t = -static_cast<double>(state.range(1));
    EvalContext ctx = EvalContext::make(digits);
    LerchParams params{Complex(Real(0.6, ctx.working_bits), Real(t, ctx.working_bits)),
                       Real(0.7, ctx.working_bits), Real(0.3, ctx.working_bits)};
    for (auto _ : state) {
        EvalResult r = lerch(params, ctx);
        benchmark::DoNotOptimize(r.value.re().to_double());
    }
}
BENCHMARK(BM_lerch)->Args({50, 1000000})->Args({100, 1000000})->Unit(benchmark::kMillisecond);

void BM_dirichlet_siegel(benchmark::State& state) {
    int digits = static_cast<int>(state.range(0));
    double t = static_cast<double>(state.range(1));
    EvalContext ctx = EvalContext::make(digits);
    std::vector<Complex> vals{Complex(ctx.working_bits), Complex(1L, ctx.working_bits),
                              Complex(ctx.working_bits), Complex(-1L, ctx.working_bits),
                              Complex(ctx.working_bits), Complex(-1L, ctx.working_bits),
                              Complex(ctx.working_bits), Complex(1L, ctx.working_bits)};
    DirichletCharacter chi = analyze_character(8, vals, ctx);
    Complex s(Real(0.6, ctx.working_bits), Real(t, ctx.working_bits));
    for (auto _ : state) {
        EvalResult r = l_siegel(s, chi, ctx);
        benchmark::DoNotOptimize(r.value.re().to_double());
    }
}
BENCHMARK(BM_dirichlet_siegel)->Args({50, 100000})->Unit(benchmark::kMillisecond);

} // namespace

BENCHMARK_MAIN();
