#include <doctest.h>

#include <random>

#include "chered/cyclotomic.hpp"

using namespace chered;

TEST_CASE("cyclotomic polynomial tables") {
    CHECK(CycloField::get(1).degree() == 1);
    CHECK(CycloField::get(2).degree() == 1);
    CHECK(CycloField::get(3).degree() == 2);
    CHECK(CycloField::get(4).degree() == 2);
    CHECK(CycloField::get(6).degree() == 2);
    CHECK(CycloField::get(12).degree() == 4);
    // Phi_4 = x^2 + 1
    const auto& phi4 = CycloField::get(4).phi();
    CHECK(phi4 == std::vector<Rational>{1, 0, 1});
    // Phi_6 = x^2 - x + 1
    const auto& phi6 = CycloField::get(6).phi();
    CHECK(phi6 == std::vector<Rational>{1, -1, 1});
}

TEST_CASE("zeta powers and basic products") {
    // l=4: zeta * zeta = -1
    Cyclo z4 = Cyclo::zeta(4, 1);
    CHECK(z4 * z4 == Cyclo(4, Rational(-1)));
    // l=2: zeta * zeta = 1
    Cyclo z2 = Cyclo::zeta(2, 1);
    CHECK(z2 * z2 == Cyclo::one(2));
    CHECK(z2 == Cyclo(2, Rational(-1)));
    // l=3: (1 + z)(1 + z^2) = 1, computed by brute-force reduction
    Cyclo a = Cyclo::one(3) + Cyclo::zeta(3, 1);
    Cyclo b = Cyclo::one(3) + Cyclo::zeta(3, 2);
    CHECK(a * b == Cyclo::one(3));
}

TEST_CASE("root of unity identities") {
    for (unsigned ell : {2u, 3u, 4u, 6u}) {
        // zeta^ell = 1
        Cyclo acc = Cyclo::one(ell);
        for (unsigned i = 0; i < ell; ++i) acc = acc * Cyclo::zeta(ell, 1);
        CHECK(acc == Cyclo::one(ell));
        // sum over r of zeta^{rs} vanishes for s not divisible by ell
        for (unsigned s = 1; s < ell; ++s) {
            Cyclo sum = Cyclo::zero(ell);
            for (unsigned r = 0; r < ell; ++r) sum += Cyclo::zeta(ell, static_cast<long>(r * s));
            CHECK(sum.is_zero());
        }
    }
}

TEST_CASE("ring axioms on random scalars") {
    std::mt19937_64 rng(42);
    std::uniform_int_distribution<long> d(-5, 5);
    for (unsigned ell : {3u, 4u, 6u}) {
        unsigned deg = CycloField::get(ell).degree();
        auto rand_scalar = [&]() {
            std::vector<Rational> c(deg);
            for (auto& x : c) x = Rational(d(rng), 1 + std::abs(d(rng)));
            return Cyclo::from_poly(ell, c);
        };
        for (int t = 0; t < 25; ++t) {
            Cyclo a = rand_scalar(), b = rand_scalar(), c = rand_scalar();
            CHECK((a + b) + c == a + (b + c));
            CHECK(a * (b + c) == a * b + a * c);
            CHECK(a * b == b * a);
            CHECK((a * b) * c == a * (b * c));
        }
    }
}

TEST_CASE("inverses") {
    std::mt19937_64 rng(7);
    std::uniform_int_distribution<long> d(-4, 4);
    for (unsigned ell : {2u, 3u, 4u, 6u}) {
        unsigned deg = CycloField::get(ell).degree();
        int found = 0;
        while (found < 20) {
            std::vector<Rational> c(deg);
            for (auto& x : c) x = Rational(d(rng));
            Cyclo a = Cyclo::from_poly(ell, c);
            if (a.is_zero()) continue;
            ++found;
            CHECK(a * a.inverse() == Cyclo::one(ell));
        }
    }
    CHECK_THROWS_AS(Cyclo::zero(4).inverse(), std::domain_error);
}
