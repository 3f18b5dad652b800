#include <benchmark/benchmark.h>

#include <random>

#include "chered/ratfunc.hpp"

using namespace chered;

namespace {

ParamPoly dense_poly(const Context& ctx, unsigned deg, std::mt19937_64& rng) {
    std::uniform_int_distribution<long> dc(-5, 5);
    ParamPoly p(&ctx);
    std::vector<Monomial> monos;
    Monomial m(ctx.num_vars, 0);
    // all monomials in U_1, U_2, hbar up to total degree deg
    for (unsigned a = 0; a <= deg; ++a) {
        for (unsigned b = 0; a + b <= deg; ++b) {
            for (unsigned c = 0; a + b + c <= deg; ++c) {
                m[0] = static_cast<uint16_t>(a);
                m[1] = static_cast<uint16_t>(b);
                m[ctx.hbar_index()] = static_cast<uint16_t>(c);
                long v = dc(rng);
                if (v) p.add_term(m, Cyclo(ctx.ell, Rational(v)));
            }
        }
    }
    return p;
}

void BM_parampoly_mul(benchmark::State& state) {
    auto ctx = Context::make(4, 2, 2);
    std::mt19937_64 rng(1);
    ParamPoly a = dense_poly(*ctx, static_cast<unsigned>(state.range(0)), rng);
    ParamPoly b = dense_poly(*ctx, static_cast<unsigned>(state.range(0)), rng);
    for (auto _ : state) {
        benchmark::DoNotOptimize(a * b);
    }
}
BENCHMARK(BM_parampoly_mul)->Arg(2)->Arg(4)->Arg(6);

void BM_poly_gcd(benchmark::State& state) {
    auto ctx = Context::make(4, 2, 2);
    std::mt19937_64 rng(2);
    ParamPoly g = dense_poly(*ctx, 2, rng);
    ParamPoly a = dense_poly(*ctx, static_cast<unsigned>(state.range(0)), rng) * g;
    ParamPoly b = dense_poly(*ctx, static_cast<unsigned>(state.range(0)), rng) * g;
    for (auto _ : state) {
        benchmark::DoNotOptimize(poly_gcd(a, b));
    }
}
BENCHMARK(BM_poly_gcd)->Arg(1)->Arg(2);

void BM_ratfunc_add(benchmark::State& state) {
    auto ctx = Context::make(4, 2, 2);
    std::mt19937_64 rng(3);
    ParamPoly u1 = ParamPoly::u(*ctx, 1), u2 = ParamPoly::u(*ctx, 2);
    ParamPoly h = ParamPoly::hbar(*ctx);
    RatFunc a(dense_poly(*ctx, 2, rng), u1 - u2 + h);
    RatFunc b(dense_poly(*ctx, 2, rng), u1 + h);
    for (auto _ : state) {
        benchmark::DoNotOptimize(a + b);
    }
}
BENCHMARK(BM_ratfunc_add);

} // namespace

BENCHMARK_MAIN();
