#include <benchmark/benchmark.h>

#include "seqcomb/family.hpp"
#include "seqcomb/norms.hpp"
#include "seqcomb/ravg.hpp"
#include "seqcomb/renorm.hpp"

namespace {

using namespace seqcomb;

void bm_schreier_norm(benchmark::State& state) {
    FamilyPtr g = fam_S(Ordinal(Nat(2)));
    Vec x;
    for (unsigned i = 1; i <= 12; ++i) x[i] = Rat(1, i);
    for (auto _ : state) benchmark::DoNotOptimize(schreier_norm(g, x));
}
BENCHMARK(bm_schreier_norm);

void bm_rank(benchmark::State& state) {
    FamilyPtr g = fam_comb(fam_A(3), fam_S(Ordinal(Nat(1))));
    FinSet e{2, 5, 7};
    for (auto _ : state) benchmark::DoNotOptimize(rank(g, e));
}
BENCHMARK(bm_rank);

void bm_ravg(benchmark::State& state) {
    SetGen m{{}, 3, 2};
    Ordinal two(Nat(2));
    for (auto _ : state) benchmark::DoNotOptimize(repeated_average(two, m, 2));
}
BENCHMARK(bm_ravg);

void bm_vee(benchmark::State& state) {
    FddBlocking xs{SeqSpaceSpec::schreier(fam_S(Ordinal()))};
    SeqSpaceSpec es = SeqSpaceSpec::schreier(fam_S(Ordinal(Nat(1))));
    Vec x;
    for (unsigned i = 1; i <= 8; ++i) x[i] = Rat(1, i);
    for (auto _ : state) benchmark::DoNotOptimize(vee_norm(xs, es, x));
}
BENCHMARK(bm_vee);

}  // namespace

BENCHMARK_MAIN();
