#include <benchmark/benchmark.h>

#include "superdiv/divisor.hpp"
#include "superdiv/invariants.hpp"
#include "superdiv/random.hpp"
#include "superdiv/representability.hpp"

namespace {

using namespace superdiv;

void BM_PolynomialMultiply(benchmark::State& state) {
    Rng rng(7);
    ContextPtr base = sample_base(3);
    SuperPolynomial p = rng.polynomial(base, 4, 2, 12);
    SuperPolynomial q = rng.polynomial(base, 4, 2, 12);
    for (auto _ : state) {
        benchmark::DoNotOptimize(p * q);
    }
}
BENCHMARK(BM_PolynomialMultiply);

void BM_Reynolds(benchmark::State& state) {
    const unsigned g = static_cast<unsigned>(state.range(0));
    TensorPowerContext tp = invariants_context(g);
    Rng rng(11);
    SuperPolynomial p = rng.polynomial(tp.context(), 2, 2, 8);
    for (auto _ : state) {
        benchmark::DoNotOptimize(tp.reynolds(p));
    }
}
BENCHMARK(BM_Reynolds)->Arg(3)->Arg(4);

void BM_InvariantBasis(benchmark::State& state) {
    const unsigned g = static_cast<unsigned>(state.range(0));
    for (auto _ : state) {
        TensorPowerContext tp = invariants_context(g);
        benchmark::DoNotOptimize(tp.invariant_basis(2, 1));
    }
}
BENCHMARK(BM_InvariantBasis)->Arg(2)->Arg(3);

void BM_NormalForm(benchmark::State& state) {
    const unsigned g = static_cast<unsigned>(state.range(0));
    Rng rng(13);
    ContextPtr base = sample_base(2);
    Superdivisor D = rng.divisor(g, base, 2, 3);
    QuotientPresentation Q(D);
    SuperPolynomial z = SuperPolynomial::variable(Q.ambient(), "z");
    SuperPolynomial big = z;
    for (unsigned i = 0; i < 2 * g; ++i) big = big * z;
    for (auto _ : state) {
        benchmark::DoNotOptimize(Q.normal_form(big));
    }
}
BENCHMARK(BM_NormalForm)->Arg(2)->Arg(4);

void BM_Roundtrip(benchmark::State& state) {
    const unsigned g = static_cast<unsigned>(state.range(0));
    Rng rng(17);
    ContextPtr base = sample_base(2);
    Superdivisor D = rng.divisor(g, base, 2, 3);
    for (auto _ : state) {
        benchmark::DoNotOptimize(roundtrip_check(D));
    }
}
BENCHMARK(BM_Roundtrip)->Arg(2)->Arg(3);

}  // namespace

BENCHMARK_MAIN();
