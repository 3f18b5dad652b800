#include <doctest.h>

#include <random>

#include "chered/parampoly.hpp"

using namespace chered;

namespace {

ParamPoly rand_poly(const Context& ctx, std::mt19937_64& rng, unsigned maxdeg = 2,
                    int nterms = 3) {
    std::uniform_int_distribution<unsigned> de(0, maxdeg);
    std::uniform_int_distribution<long> dc(-4, 4);
    std::uniform_int_distribution<unsigned> dv(0, ctx.num_vars - 1);
    ParamPoly p(&ctx);
    for (int t = 0; t < nterms; ++t) {
        Monomial m(ctx.num_vars, 0);
        unsigned budget = maxdeg;
        for (int v = 0; v < 2 && budget; ++v) {
            unsigned idx = dv(rng);
            unsigned e = de(rng) % (budget + 1);
            m[idx] = static_cast<uint16_t>(m[idx] + e);
            budget -= e;
        }
        long c = dc(rng);
        if (c) p.add_term(m, Cyclo(ctx.ell, Rational(c)));
    }
    return p;
}

} // namespace

TEST_CASE("arithmetic and ring axioms") {
    auto ctx = Context::make(4, 2, 2);
    std::mt19937_64 rng(3);
    for (int t = 0; t < 30; ++t) {
        ParamPoly a = rand_poly(*ctx, rng), b = rand_poly(*ctx, rng), c = rand_poly(*ctx, rng);
        CHECK((a + b) + c == a + (b + c));
        CHECK(a * (b + c) == a * b + a * c);
        CHECK(a * b == b * a);
        CHECK((a * b) * c == a * (b * c));
        CHECK((a - a).is_zero());
    }
}

TEST_CASE("no zero coefficients stored") {
    auto ctx = Context::make(2, 1, 2);
    ParamPoly a = ParamPoly::u(*ctx, 1);
    ParamPoly b = -a;
    CHECK((a + b).term_count() == 0);
}

TEST_CASE("substitution is a ring homomorphism") {
    auto ctx = Context::make(2, 1, 2);
    std::mt19937_64 rng(5);
    std::vector<std::pair<unsigned, ParamPoly>> sub{
        {1, ParamPoly::u(*ctx, 1) + ParamPoly::hbar(*ctx)},
        {2, ParamPoly::u(*ctx, 1)}};
    for (int t = 0; t < 15; ++t) {
        ParamPoly a = rand_poly(*ctx, rng), b = rand_poly(*ctx, rng);
        CHECK((a + b).substitute_u(sub) == a.substitute_u(sub) + b.substitute_u(sub));
        CHECK((a * b).substitute_u(sub) == a.substitute_u(sub) * b.substitute_u(sub));
    }
}

TEST_CASE("exact division") {
    auto ctx = Context::make(2, 1, 2);
    ParamPoly u1 = ParamPoly::u(*ctx, 1), u2 = ParamPoly::u(*ctx, 2);
    ParamPoly h = ParamPoly::hbar(*ctx);
    ParamPoly s0 = ParamPoly::s(*ctx, 0);

    SUBCASE("difference of squares") {
        ParamPoly f = u2 * u2 - u1 * u1;
        ParamPoly g = u2 - u1;
        CHECK(exact_divide(f, g) == u2 + u1);
    }
    SUBCASE("zero dividend") {
        CHECK(exact_divide(ParamPoly::zero(*ctx), u1).is_zero());
    }
    SUBCASE("divided-difference example") {
        ParamPoly a = (u1 + h) * (u1 - s0) - (u2 + h) * (u2 - s0);
        ParamPoly g = u1 - u2;
        CHECK(exact_divide(a, g) == u1 + u2 + h - s0);
    }
    SUBCASE("non-divisible throws") {
        CHECK_THROWS_AS(exact_divide(u1 + h, u2), NonDivisible);
    }
    SUBCASE("random products divide back") {
        std::mt19937_64 rng(11);
        for (int t = 0; t < 20; ++t) {
            ParamPoly a = rand_poly(*ctx, rng), b = rand_poly(*ctx, rng);
            if (b.is_zero()) continue;
            CHECK(exact_divide(a * b, b) == a);
        }
    }
}

TEST_CASE("gcd") {
    auto ctx = Context::make(2, 1, 2);
    std::mt19937_64 rng(13);
    ParamPoly u1 = ParamPoly::u(*ctx, 1), u2 = ParamPoly::u(*ctx, 2);
    ParamPoly h = ParamPoly::hbar(*ctx), k = ParamPoly::kappa(*ctx);

    SUBCASE("known common factor") {
        ParamPoly g = u1 - u2 + h;
        ParamPoly a = g * (u1 + k);
        ParamPoly b = g * (u2 * u2 + h);
        ParamPoly d = poly_gcd(a, b);
        // gcd is monic and divides both
        CHECK(exact_divide(a, d) * d == a);
        CHECK(exact_divide(b, d) * d == b);
        CHECK(d.degree() == g.degree());
    }
    SUBCASE("coprime") {
        ParamPoly d = poly_gcd(u1 + h, u2 + k);
        CHECK(d.is_constant());
    }
    SUBCASE("random g*(a,b)") {
        for (int t = 0; t < 10; ++t) {
            ParamPoly g = rand_poly(*ctx, rng, 2, 2);
            if (g.is_zero()) continue;
            ParamPoly a = rand_poly(*ctx, rng, 2, 2), b = rand_poly(*ctx, rng, 2, 2);
            if (a.is_zero() || b.is_zero()) continue;
            ParamPoly d = poly_gcd(g * a, g * b);
            // g divides the gcd
            ParamPoly q, r;
            ParamPoly::divide_qr(d, g, q, r);
            CHECK(r.is_zero());
            // gcd divides both products
            ParamPoly q2, r2;
            ParamPoly::divide_qr(g * a, d, q2, r2);
            CHECK(r2.is_zero());
        }
    }
}

TEST_CASE("structural s resolution") {
    auto ctx = Context::make(4, 2, 2); // q = 2
    // s_2 = s_0 + (l/p) hbar = s_0 + 2 hbar
    ParamPoly expect = ParamPoly::s(*ctx, 0);
    ParamPoly t = ParamPoly::hbar(*ctx);
    t *= Rational(2);
    expect += t;
    CHECK(ctx->s_struct(2) == expect);
    CHECK(ctx->s_struct(1) == ParamPoly::s(*ctx, 1));
}
