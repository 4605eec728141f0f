#include "dfc/dfc.hpp"

#include <benchmark/benchmark.h>

using namespace dfc;

namespace {

Rational q(long a, long b) {
    Rational r(a, b);
    r.canonicalize();
    return r;
}

// (x + 16) y' = y / 2 with y(0) = 1/4
IvpProblem sqrt_problem() { return IvpProblem::from_initial_values(DiffOp({Poly{-15, -1}, Poly{32, 2}}), {q(1, 4)}); }

// y'''' = y
IvpProblem fourth_order() {
    return IvpProblem::from_initial_values(DiffOp({Poly{-1}, Poly(), Poly(), Poly(), Poly{1}}),
                                           {q(3, 2), q(-1, 2), q(-3, 2), q(1, 2)});
}

void BM_Recurrence(benchmark::State& state) {
    DiffOp L({Poly{1, 0, 3}, Poly{0, -2, 0, 1}, Poly{5, 0, 0, 0, 1}});
    for (auto _ : state) benchmark::DoNotOptimize(chebyshev_recurrence(L));
}
BENCHMARK(BM_Recurrence);

void BM_ApproxStartIndex(benchmark::State& state) {
    IvpProblem ivp = fourth_order();
    SolveOptions o;
    o.N = state.range(0);
    for (auto _ : state) benchmark::DoNotOptimize(approximate(ivp, 30, o));
    state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_ApproxStartIndex)->RangeMultiplier(2)->Range(100, 1600)->Unit(benchmark::kMillisecond)->Complexity();

void BM_ApproxDegree(benchmark::State& state) {
    IvpProblem ivp = sqrt_problem();
    for (auto _ : state) benchmark::DoNotOptimize(approximate(ivp, static_cast<int>(state.range(0))));
}
BENCHMARK(BM_ApproxDegree)->DenseRange(10, 50, 20)->Unit(benchmark::kMillisecond);

void BM_ExpandProduct(benchmark::State& state) {
    const Rational eps = pow10(-static_cast<int>(state.range(0)));
    for (auto _ : state)
        benchmark::DoNotOptimize(expand_product(Poly{1, 1}, Poly{2, 0, 1}, ChebPoly::basis(1), eps));
}
BENCHMARK(BM_ExpandProduct)->Arg(10)->Arg(20)->Arg(40)->Unit(benchmark::kMillisecond);

void BM_Validate(benchmark::State& state) {
    IvpProblem ivp = sqrt_problem();
    const int d = static_cast<int>(state.range(0));
    ChebPoly p = approximate(ivp, d).poly;
    const Rational eps = pow10(-2 * d - 44);
    for (auto _ : state) benchmark::DoNotOptimize(validate(ivp, p, eps));
}
BENCHMARK(BM_Validate)->Arg(20)->Arg(30)->Unit(benchmark::kMillisecond);

} // namespace

BENCHMARK_MAIN();
