#include <doctest.h>

#include <random>

#include "chered/ratfunc.hpp"

using namespace chered;

namespace {

RatFunc rand_rf(const Context& ctx, std::mt19937_64& rng) {
    std::uniform_int_distribution<long> dc(-3, 3);
    std::uniform_int_distribution<unsigned> du(1, ctx.n);
    auto lin = [&]() {
        ParamPoly f = ParamPoly::u(ctx, du(rng));
        long c = dc(rng);
        ParamPoly h = ParamPoly::hbar(ctx);
        h *= Rational(c);
        f += h;
        f += ParamPoly::constant(ctx, Rational(dc(rng)));
        return f;
    };
    ParamPoly num = lin() * lin();
    num += ParamPoly::constant(ctx, Rational(dc(rng)));
    ParamPoly den = lin();
    if (den.is_zero()) den = ParamPoly::constant(ctx, ctx.cone());
    return RatFunc(num, den);
}

} // namespace

TEST_CASE("canonical form") {
    auto ctx = Context::make(2, 1, 2);
    ParamPoly u1 = ParamPoly::u(*ctx, 1), u2 = ParamPoly::u(*ctx, 2);
    ParamPoly h = ParamPoly::hbar(*ctx);

    // (u1^2 - u2^2)/(u1 - u2) reduces to the polynomial u1 + u2
    RatFunc r(u1 * u1 - u2 * u2, u1 - u2);
    CHECK(r.is_polynomial());
    CHECK(r.num() == u1 + u2);

    // identical fractions have identical representations
    ParamPoly g = u1 + h;
    RatFunc a(u1 * g, u2 * g);
    RatFunc b(u1, u2);
    CHECK(a == b);

    // denominator is monic in graded lex
    ParamPoly den = u2;
    den *= Rational(3);
    RatFunc c(u1, den);
    CHECK(c.den() == u2);
}

TEST_CASE("field axioms spot checks") {
    auto ctx = Context::make(2, 1, 2);
    std::mt19937_64 rng(17);
    for (int t = 0; t < 15; ++t) {
        RatFunc a = rand_rf(*ctx, rng), b = rand_rf(*ctx, rng), c = rand_rf(*ctx, rng);
        CHECK((a + b) + c == a + (b + c));
        CHECK(a * (b + c) == a * b + a * c);
        CHECK(a * b == b * a);
        if (!a.is_zero()) {
            CHECK(a * a.inverse() == RatFunc::one(*ctx));
            CHECK(b / a * a == b);
        }
        CHECK((a - a).is_zero());
    }
}

TEST_CASE("zero denominator rejected") {
    auto ctx = Context::make(2, 1, 2);
    CHECK_THROWS_AS(RatFunc(ParamPoly::u(*ctx, 1), ParamPoly::zero(*ctx)), std::domain_error);
}
