#include <benchmark/benchmark.h>

#include "quartres/class_group.hpp"
#include "quartres/dirichlet.hpp"
#include "quartres/enumerate.hpp"

using namespace quartres;

namespace {

NumberField F(const char* s) { return NumberField(IntPoly::parse(s)); }

void BM_FieldConstruction(benchmark::State& st)
{
    IntPoly f = IntPoly::parse("x^4-2x^3-279x^2-1276x+2132");
    for (auto _ : st) benchmark::DoNotOptimize(NumberField(f).disc());
}
BENCHMARK(BM_FieldConstruction)->Unit(benchmark::kMillisecond);

void BM_SplittingTypes(benchmark::State& st)
{
    NumberField L = F("x^4-2x^3-4x^2+4x+2");
    auto primes = primes_up_to(1000);
    for (auto _ : st) {
        NumberField K(L.poly());
        int s = 0;
        for (auto p : primes) s += K.splitting_type(p).prime_count();
        benchmark::DoNotOptimize(s);
    }
}
BENCHMARK(BM_SplittingTypes)->Unit(benchmark::kMillisecond);

void BM_PhiClosedForm(benchmark::State& st)
{
    NumberField k = F("x^3-4x-1");
    auto L2 = discover_L2(k, false);
    for (auto _ : st) benchmark::DoNotOptimize(phi_k(k, L2, st.range(0), false));
}
BENCHMARK(BM_PhiClosedForm)->Arg(1000)->Arg(10000)->Unit(benchmark::kMillisecond);

void BM_PhiCharsum(benchmark::State& st)
{
    NumberField k = F("x^3-4x-1");
    auto L2 = discover_L2(k, false);
    for (auto _ : st) benchmark::DoNotOptimize(phi_k_charsum(k, L2, st.range(0), false));
}
BENCHMARK(BM_PhiCharsum)->Arg(1000)->Unit(benchmark::kMillisecond);

void BM_HunterCubics(benchmark::State& st)
{
    SearchSpec s;
    s.degree = 3;
    s.mode = DiscMode::AbsBound;
    s.bound = st.range(0);
    for (auto _ : st) benchmark::DoNotOptimize(enumerate_fields(s).size());
}
BENCHMARK(BM_HunterCubics)->Arg(2000)->Arg(20000)->Unit(benchmark::kMillisecond);

void BM_FieldsOfK(benchmark::State& st)
{
    NumberField k = F("x^3-x^2-5x+4");
    for (auto _ : st) benchmark::DoNotOptimize(enumerate_F_of_k(k, 16).records.size());
}
BENCHMARK(BM_FieldsOfK)->Unit(benchmark::kMillisecond);

void BM_ClassData(benchmark::State& st)
{
    NumberField k = F("x^3+x^2-54x-169");
    for (auto _ : st) benchmark::DoNotOptimize(class_data(k).rk2);
}
BENCHMARK(BM_ClassData)->Unit(benchmark::kMillisecond)->Iterations(2);

}  // namespace
BENCHMARK_MAIN();
