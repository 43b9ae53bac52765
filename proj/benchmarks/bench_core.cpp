#include <benchmark/benchmark.h>

#include "lgmf/cohomology.hpp"
#include "lgmf/crw.hpp"
#include "lgmf/functor_e.hpp"
#include "lgmf/groebner.hpp"
#include "lgmf/mf.hpp"
#include "lgmf/tft.hpp"

using namespace lgmf;

static void BM_GroebnerCyclic3(benchmark::State& state)
{
    auto T = make_table({"x", "y", "z"});
    std::vector<Polynomial> gens{parse_polynomial("x+y+z", T), parse_polynomial("x*y+y*z+z*x", T),
                                 parse_polynomial("x*y*z-1", T)};
    for (auto _ : state) benchmark::DoNotOptimize(groebner_basis(gens));
}
BENCHMARK(BM_GroebnerCyclic3);

static void BM_KoszulCohomology(benchmark::State& state)
{
    auto A = SemifreeCDGA::polynomial({"x", "y", "z"})
                 .adjoin({{"t1", Parity::Odd, 2}, {"t2", Parity::Odd, 2}},
                         std::vector<std::string>{"x^2 - y*z", "y^2 - x*z"});
    for (auto _ : state) benchmark::DoNotOptimize(cohomology_hilbert(A, static_cast<int>(state.range(0))));
}
BENCHMARK(BM_KoszulCohomology)->Arg(4)->Arg(6)->Arg(8);

static void BM_EndOfUnit(benchmark::State& state)
{
    auto T = make_table({"a", "b"});
    auto I = unit_mf(parse_polynomial("a^2+b^2", T), {"a", "b"});
    for (auto _ : state) {
        auto E = end_complex(I);
        benchmark::DoNotOptimize(cohomology_hilbert(E.module, static_cast<int>(state.range(0))));
    }
}
BENCHMARK(BM_EndOfUnit)->Arg(4)->Arg(6);

static void BM_SerreComposite(benchmark::State& state)
{
    auto X = cotangent_stack({"x"});
    for (auto _ : state) benchmark::DoNotOptimize(serre_composite(X, 6));
}
BENCHMARK(BM_SerreComposite)->Unit(benchmark::kMillisecond);

static void BM_GenusOne(benchmark::State& state)
{
    auto A = polynomial_algebra(1);
    for (auto _ : state) benchmark::DoNotOptimize(z_genus(A, 1, static_cast<int>(state.range(0))));
}
BENCHMARK(BM_GenusOne)->Arg(3)->Arg(4)->Unit(benchmark::kMillisecond);
BENCHMARK_MAIN();
