#include <benchmark/benchmark.h>

#include "ddpoly/monoid.hpp"
#include "ddpoly/numpoly.hpp"

namespace {

void BM_EnumerateTotal(benchmark::State& state) {
    ddpoly::Signature sig(2, 1);
    for (auto _ : state) {
        auto v = ddpoly::enumerate_total(sig, static_cast<int>(state.range(0)));
        benchmark::DoNotOptimize(v);
    }
}
BENCHMARK(BM_EnumerateTotal)->Arg(6)->Arg(10)->Arg(14);

void BM_BinomialBasisChange(benchmark::State& state) {
    int deg = static_cast<int>(state.range(0));
    ddpoly::Dense dense(deg + 1);
    for (int i = 0; i <= deg; ++i) {
        dense[i] = ddpoly::Rational(i + 1, 3);
    }
    dense[deg] = ddpoly::Rational(ddpoly::factorial(deg));
    // make it numerical: round-trip a binomial-coefficient vector instead
    std::vector<ddpoly::Integer> cs(deg + 1, ddpoly::Integer(7));
    ddpoly::NumericalPolynomial p(cs);
    ddpoly::Dense d = p.to_dense();
    for (auto _ : state) {
        auto q = ddpoly::to_binomial_basis(d);
        benchmark::DoNotOptimize(q);
    }
}
BENCHMARK(BM_BinomialBasisChange)->Arg(4)->Arg(8);

}  // namespace

BENCHMARK_MAIN();
