#include <benchmark/benchmark.h>

#include <qmhs/closed_forms.hpp>
#include <qmhs/identities.hpp>
#include <qmhs/sums.hpp>

#include <map>
#include <vector>

using namespace qmhs;

namespace {

void BM_UnitTableBuild(benchmark::State& state) {
    int n = static_cast<int>(state.range(0));
    for (auto _ : state) {
        UnitTable units(n);
        benchmark::DoNotOptimize(units.u(1));
    }
}
BENCHMARK(BM_UnitTableBuild)->Arg(12)->Arg(24)->Arg(48)->Arg(96);

void BM_CyclotomicMul(benchmark::State& state) {
    int n = static_cast<int>(state.range(0));
    UnitTable units(n);
    Cyclotomic a = units.u(1);
    Cyclotomic b = units.u(n - 1);
    for (int i = 0; i < 6; ++i) a *= a;  // grow the coefficients a little
    for (auto _ : state) {
        Cyclotomic c = a * b;
        benchmark::DoNotOptimize(c);
    }
}
BENCHMARK(BM_CyclotomicMul)->Arg(24)->Arg(60)->Arg(120);

void BM_NestedSumAllOnes(benchmark::State& state) {
    int n = static_cast<int>(state.range(0));
    UnitTable units(n);
    Composition ones(std::vector<int>(static_cast<size_t>(n - 1), 1));
    for (auto _ : state) {
        benchmark::DoNotOptimize(z_dp(units, ones));
    }
}
BENCHMARK(BM_NestedSumAllOnes)->Arg(8)->Arg(16)->Arg(24);

void BM_NestedSumMixed(benchmark::State& state) {
    int n = static_cast<int>(state.range(0));
    UnitTable units(n);
    Composition s(std::vector<int>{2, -1, 3, 1, -2});
    for (auto _ : state) {
        benchmark::DoNotOptimize(z_dp(units, s));
    }
}
BENCHMARK(BM_NestedSumMixed)->Arg(10)->Arg(20)->Arg(40);

void BM_SymmetrizedSum(benchmark::State& state) {
    int n = static_cast<int>(state.range(0));
    UnitTable units(n);
    int m = n - 1;
    MultisetIndex ms({{2, m / 2}, {1, m - m / 2}});
    for (auto _ : state) {
        benchmark::DoNotOptimize(y_dp(units, ms));
    }
}
BENCHMARK(BM_SymmetrizedSum)->Arg(8)->Arg(12)->Arg(16);

void BM_SweepFamily(benchmark::State& state) {
    int n_max = static_cast<int>(state.range(0));
    for (auto _ : state) {
        Verifier v;
        benchmark::DoNotOptimize(v.sweep(IdentityId::TH5, n_max));
    }
}
BENCHMARK(BM_SweepFamily)->Arg(6)->Arg(10)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
