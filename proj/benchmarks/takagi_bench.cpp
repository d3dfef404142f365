#include "takagi/local_levels.hpp"
#include "takagi/omega.hpp"
#include "takagi/singular_bv.hpp"
#include "takagi/takagi_eval.hpp"

#include <benchmark/benchmark.h>

#include <random>

using namespace takagi;

namespace {

// denominators with growing multiplicative order of 2
void BM_TakagiExact(benchmark::State& state) {
    std::mt19937_64 g(42);
    std::uniform_int_distribution<unsigned long> qd(2, static_cast<unsigned long>(state.range(0)));
    std::vector<Rat> xs;
    for (int i = 0; i < 64; ++i) {
        unsigned long q = qd(g);
        xs.emplace_back(mpz_class(g() % (q + 1)), mpz_class(q));
    }
    std::size_t i = 0;
    for (auto _ : state) {
        benchmark::DoNotOptimize(takagi_exact(xs[i++ & 63]));
    }
}
BENCHMARK(BM_TakagiExact)->Arg(1 << 10)->Arg(1 << 15)->Arg(1 << 20);

void BM_SampleTauL(benchmark::State& state) {
    for (auto _ : state) {
        benchmark::DoNotOptimize(sample_pl(FunctionTag::tauL(), static_cast<unsigned>(state.range(0))));
    }
}
BENCHMARK(BM_SampleTauL)->Arg(8)->Arg(10)->Arg(12)->Unit(benchmark::kMillisecond);

void BM_Breakpoints(benchmark::State& state) {
    for (auto _ : state) {
        benchmark::DoNotOptimize(enumerate_breakpoints(static_cast<unsigned>(state.range(0))));
    }
}
BENCHMARK(BM_Breakpoints)->Arg(6)->Arg(8)->Arg(10)->Unit(benchmark::kMillisecond);

void BM_ProjectOmega(benchmark::State& state) {
    std::mt19937_64 g(7);
    std::vector<Rat> xs;
    for (int i = 0; i < 64; ++i) {
        unsigned long q = 2 + g() % 100000;
        xs.emplace_back(mpz_class(g() % (q + 1)), mpz_class(q));
    }
    std::size_t i = 0;
    for (auto _ : state) {
        benchmark::DoNotOptimize(project_omega_L(xs[i++ & 63]));
    }
}
BENCHMARK(BM_ProjectOmega);

void BM_EnumerateMembers(benchmark::State& state) {
    LocalLevelSetDesc d = local_level_set(BinExp::of_rational(Rat(1, 3), TailVariant::LowTail));
    for (auto _ : state) {
        benchmark::DoNotOptimize(enumerate_members(d, static_cast<unsigned>(state.range(0))));
    }
}
BENCHMARK(BM_EnumerateMembers)->Arg(4)->Arg(8)->Arg(12);

} // namespace

BENCHMARK_MAIN();
