#include "pcert/landen/map.hpp"
#include "pcert/landen/periodic.hpp"
#include "pcert/manifold/homoclinic.hpp"
#include "pcert/mpoly/eliminate.hpp"
#include "pcert/upoly/resultant.hpp"
#include "pcert/upoly/roots.hpp"

#include <benchmark/benchmark.h>

#include <random>

using namespace pcert;

namespace {

UPoly random_poly(std::mt19937_64& rng, int degree)
{
    std::uniform_int_distribution<long> c(-1000, 1000);
    std::vector<Rational> cs(static_cast<std::size_t>(degree + 1));
    for (auto& x : cs) {
        x = c(rng);
    }
    cs.back() = 1;
    return UPoly(cs);
}

void BM_resultant(benchmark::State& state)
{
    std::mt19937_64 rng(1);
    const int d = static_cast<int>(state.range(0));
    const UPoly a = random_poly(rng, d);
    const UPoly b = random_poly(rng, d);
    for (auto _ : state) {
        benchmark::DoNotOptimize(resultant(a, b));
    }
}
BENCHMARK(BM_resultant)->Arg(6)->Arg(12)->Arg(24)->Arg(48);

void BM_isolate_roots(benchmark::State& state)
{
    std::mt19937_64 rng(2);
    const UPoly p = random_poly(rng, static_cast<int>(state.range(0)));
    const Rational width(1, Integer("100000000000000000000"));
    for (auto _ : state) {
        benchmark::DoNotOptimize(isolate_roots(p, width));
    }
}
BENCHMARK(BM_isolate_roots)->Arg(10)->Arg(40)->Arg(160);

void BM_period2_resultant(benchmark::State& state)
{
    const auto sys = period2_system();
    for (auto _ : state) {
        benchmark::DoNotOptimize(elim_resultant(sys[0], sys[1], "n"));
    }
}
BENCHMARK(BM_period2_resultant)->Unit(benchmark::kMillisecond);

void BM_period3_d13(benchmark::State& state)
{
    const auto sys = period3_system();
    for (auto _ : state) {
        benchmark::DoNotOptimize(elim_resultant(sys[0], sys[2], "m"));
    }
}
BENCHMARK(BM_period3_d13)->Unit(benchmark::kMillisecond);

void BM_unstable_jet(benchmark::State& state)
{
    const auto order = static_cast<unsigned>(state.range(0));
    for (auto _ : state) {
        benchmark::DoNotOptimize(landen_unstable_manifold(Precision{60}, order));
    }
}
BENCHMARK(BM_unstable_jet)->Arg(5)->Arg(8)->Unit(benchmark::kMillisecond);

void BM_homoclinic(benchmark::State& state)
{
    for (auto _ : state) {
        benchmark::DoNotOptimize(homoclinic_report());
    }
}
BENCHMARK(BM_homoclinic)->Unit(benchmark::kMillisecond);

void BM_integral(benchmark::State& state)
{
    const Precision p{60};
    const LandenState5 s{BigFloat(p, 3.1), BigFloat(p, 2.9), BigFloat(p, 1L), BigFloat(p, 2L), BigFloat(p, -1L)};
    const BigFloat tol(p, 1e-9);
    for (auto _ : state) {
        benchmark::DoNotOptimize(integral_I(s, tol));
    }
}
BENCHMARK(BM_integral)->Unit(benchmark::kMillisecond);

} // namespace

BENCHMARK_MAIN();
