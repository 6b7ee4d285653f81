#include <benchmark/benchmark.h>

#include <random>

#include "singhodge/hodge.hpp"
#include "singhodge/monodromy.hpp"
#include "singhodge/newton.hpp"
#include "singhodge/poly.hpp"

using namespace singhodge;

namespace {

std::set<ExponentVector> fixed_support(int n, int count, Exponent max_coord) {
    std::mt19937_64 rng(0xBE7C);
    std::set<ExponentVector> support;
    while (static_cast<int>(support.size()) < count) {
        ExponentVector a(n);
        bool zero = true;
        for (int i = 0; i < n; ++i) {
            a[i] = static_cast<Exponent>(rng() % (max_coord + 1));
            if (a[i] > 0) zero = false;
        }
        if (!zero) support.insert(std::move(a));
    }
    return support;
}

void BM_NewtonPolyhedron(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    const int points = static_cast<int>(state.range(1));
    const auto support = fixed_support(n, points, 9);
    for (auto _ : state) benchmark::DoNotOptimize(newton_polyhedron(support, n));
}
BENCHMARK(BM_NewtonPolyhedron)->Args({2, 8})->Args({3, 8})->Args({3, 16})->Args({4, 10});

void BM_BoundaryAndPiF(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    const auto support = fixed_support(n, 12, 9);
    const NewtonPolyhedron np = newton_polyhedron(support, n);
    for (auto _ : state) {
        const NewtonBoundary b = newton_boundary(np);
        benchmark::DoNotOptimize(pi_f(b));
    }
}
BENCHMARK(BM_BoundaryAndPiF)->Arg(2)->Arg(3)->Arg(4);

void BM_Parse(benchmark::State& state) {
    std::string text = "x^12*y + y^9*z^2 + z^11 + x*y*z";
    for (int i = 0; i < state.range(0); ++i)
        text += " + x^" + std::to_string(i + 2) + "*z^" + std::to_string(i % 7);
    for (auto _ : state) benchmark::DoNotOptimize(parse_polynomial(text));
}
BENCHMARK(BM_Parse)->Arg(8)->Arg(64);

void BM_ReplayPipeline(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    std::mt19937_64 rng(0xF00D);
    JordanBlockData j;
    j.n = n;
    for (int s = 1; s <= n - 1; ++s) j.add(Eigenvalue::one(), s, 1 + static_cast<std::int64_t>(rng() % 4));
    for (int s = 1; s <= n; ++s) j.add(Eigenvalue::rotation(1, 1 + s), s, 1);
    LaurentPolynomialZ sym;
    for (int k = 0; k <= 4; ++k) {
        sym.add(n - 1 - k, 2);
        if (k > 0) sym.add(n - 1 + k, 2);
    }
    for (auto _ : state) benchmark::DoNotOptimize(replay_main_pipeline(n, j, sym));
}
BENCHMARK(BM_ReplayPipeline)->Arg(3)->Arg(6);

}  // namespace

BENCHMARK_MAIN();
