#include <benchmark/benchmark.h>

#include "realgw/localizer.hpp"

using namespace realgw;

namespace {

MultiPolynomial dense_poly(int seed) {
    MultiPolynomial p(2);
    for (int i = 0; i <= 6; ++i)
        for (int j = 0; j <= 6 - i; ++j)
            p += MultiPolynomial::monomial(2, {i, j}, Rational((seed + 3 * i + j) % 7 - 3));
    return p;
}

}  // namespace

static void BM_PolynomialMul(benchmark::State& state) {
    MultiPolynomial a = dense_poly(1), b = dense_poly(2);
    for (auto _ : state) benchmark::DoNotOptimize(a * b);
}
BENCHMARK(BM_PolynomialMul);

static void BM_PolynomialGcd(benchmark::State& state) {
    MultiPolynomial f = dense_poly(1), u = dense_poly(2), v = dense_poly(4);
    MultiPolynomial a = f * u, b = f * v;
    for (auto _ : state) benchmark::DoNotOptimize(gcd(a, b));
}
BENCHMARK(BM_PolynomialGcd);

static void BM_VertexIntegral(benchmark::State& state) {
    WeightSystem ws(2);
    WeightPoint p = sample_weight_point(2, 0);
    NumericField f{ws, p};
    std::vector<Rational> weights{f.flag_w(Flag{1, 2, 1}), f.flag_w(Flag{1, 3, 2}),
                                  f.flag_w(Flag{1, 4, 1})};
    for (auto _ : state)
        benchmark::DoNotOptimize(vertex_integral(f, weights, static_cast<int>(state.range(0))));
}
BENCHMARK(BM_VertexIntegral)->Arg(3)->Arg(5)->Arg(8);

static void BM_Census(benchmark::State& state) {
    GraphQuery q{2, static_cast<int>(state.range(0)), 3, Involution::tau, Involution::tau,
                 SignMode::plus_only};
    for (auto _ : state) benchmark::DoNotOptimize(half_graph_census(q));
}
BENCHMARK(BM_Census)->Arg(3)->Arg(5);

static void BM_Invariant(benchmark::State& state) {
    InvariantQuery q;
    q.M = 2;
    q.d = static_cast<int>(state.range(0));
    q.phi = Involution::tau;
    q.t = q.d == 1 ? std::vector<int>{3, 1} : std::vector<int>{3, 3, 3};
    for (auto _ : state) benchmark::DoNotOptimize(invariant(q));
}
BENCHMARK(BM_Invariant)->Arg(1)->Arg(3);

BENCHMARK_MAIN();
