#pragma once

#include <random>
#include <variant>

#include "chered/psph.hpp"
#include "chered/skew.hpp"

namespace chered {

// The psph -> skew-ring dictionary: an element whose evaluation action on
// rational functions coincides with closed_form_action(g, .).
SkewElement to_skew(const PsphGenerator& g, const Context& ctx);

// Generators of T x| S_n covered by the reverse dictionary.
struct AffineGenerator {
    enum Kind : uint8_t { STrans, MuPos, MuNeg, MuAllPos, MuAllNeg };
    Kind kind;
    unsigned i = 0; // index for STrans / MuPos / MuNeg

    static AffineGenerator s(unsigned i) { return {STrans, i}; }
    static AffineGenerator mu_pos(unsigned i) { return {MuPos, i}; }    // mu_i^{ell}
    static AffineGenerator mu_neg(unsigned i) { return {MuNeg, i}; }    // mu_i^{-ell}
    static AffineGenerator mu_all_pos() { return {MuAllPos, 0}; }       // (mu_1...mu_n)^{ell/p}
    static AffineGenerator mu_all_neg() { return {MuAllNeg, 0}; }       // (mu_1...mu_n)^{-ell/p}

    std::string str() const;
};

std::vector<AffineGenerator> all_affine_generators(const Context& ctx);
AffineElement affine_of(const AffineGenerator& g, const Context& ctx);

// The skew -> psph dictionary: a rational-coefficient combination of plain
// U-permutations and psph closed-form operators. Chains act right-to-left;
// the result is the sum of coefficient * chain(f) over all chains.
struct OperatorExpr {
    struct PermStep { Perm w; };
    struct PsphStep { PsphGenerator g; };
    using Step = std::variant<PermStep, PsphStep>;
    struct Chain {
        RatFunc coeff;
        std::vector<Step> steps;
    };
    std::vector<Chain> chains;

    RatFunc apply(const RatFunc& f, const Context& ctx) const;
};

OperatorExpr from_skew(const AffineGenerator& g, const Context& ctx);

// Seeded random rational functions: a small polynomial numerator over a
// denominator drawn from a pool of linear factors. The generator algorithm is
// fixed (std::mt19937_64 with the documented draws), so failures reproduce
// across machines.
RatFunc random_ratfunc(const Context& ctx, std::mt19937_64& rng);
ParamPoly random_upoly(const Context& ctx, std::mt19937_64& rng, unsigned maxdeg = 2);

// Criterion: both dictionary directions reproduce their counterpart actions
// on `samples` seeded random rational functions per generator.
Report galois_ring_check(const Context& ctx, unsigned samples, uint64_t seed);

// Criterion: every psph generator maps every U-monomial of degree <=
// degree_bound to a polynomial; the e-symmetrized operators map elementary
// symmetric polynomials to symmetric polynomials.
Report principality_check(const Context& ctx, unsigned degree_bound);

// Skew-ring algebra check: associativity of skew_mul and the module action
// property on seeded random triples built from dictionary images.
Report skew_algebra_check(const Context& ctx, unsigned samples, uint64_t seed);

// Z/p-degree bookkeeping: to_skew(g) has all its lattice parts with total
// shift congruent to zp_degree(g) * (n ell / p) mod ell, and word_for(g) has
// the matching net sigma/tau index shift.
Report zp_degree_check(const Context& ctx);

} // namespace chered
