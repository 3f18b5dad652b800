#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "chered/context.hpp"
#include "chered/cyclotomic.hpp"

namespace chered {

// Exponent vector over the context's variable table.
using Monomial = std::vector<uint16_t>;

inline unsigned total_degree(const Monomial& m) {
    unsigned d = 0;
    for (auto e : m) d += e;
    return d;
}

// Graded lexicographic order: first by total degree, then lexicographically
// with U_1 the most significant variable. The leading term of a ParamPoly is
// the largest monomial in this order.
struct GradedLexLess {
    bool operator()(const Monomial& a, const Monomial& b) const {
        unsigned da = total_degree(a), db = total_degree(b);
        if (da != db) return da < db;
        for (size_t i = 0; i < a.size(); ++i) {
            if (a[i] != b[i]) return a[i] < b[i];
        }
        return false;
    }
};

struct NonDivisible : std::runtime_error {
    explicit NonDivisible(const std::string& what) : std::runtime_error(what) {}
};

// Sparse multivariate polynomial in the context's variables (the U_i and the
// deformation parameters) with coefficients in Q(zeta_ell). Never stores a
// zero coefficient.
class ParamPoly {
public:
    using TermMap = std::map<Monomial, Cyclo, GradedLexLess>;

    ParamPoly() : ctx_(nullptr) {}
    explicit ParamPoly(const Context* ctx) : ctx_(ctx) {}

    static ParamPoly zero(const Context& ctx) { return ParamPoly(&ctx); }
    static ParamPoly constant(const Context& ctx, const Cyclo& c);
    static ParamPoly constant(const Context& ctx, const Rational& r);
    static ParamPoly variable(const Context& ctx, unsigned var_index, unsigned power = 1);
    static ParamPoly u(const Context& ctx, unsigned i) { return variable(ctx, ctx.u_index(i)); }
    static ParamPoly hbar(const Context& ctx) { return variable(ctx, ctx.hbar_index()); }
    static ParamPoly kappa(const Context& ctx) { return variable(ctx, ctx.kappa_index()); }
    static ParamPoly s(const Context& ctx, unsigned m) { return variable(ctx, ctx.s_index(m)); }

    const Context* context() const { return ctx_; }
    const TermMap& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const;
    size_t term_count() const { return terms_.size(); }
    unsigned degree() const; // total degree, 0 for the zero polynomial

    // Largest monomial in graded lex and its coefficient.
    const Monomial& leading_monomial() const;
    const Cyclo& leading_coeff() const;

    void add_term(const Monomial& m, const Cyclo& c);

    ParamPoly operator-() const;
    ParamPoly& operator+=(const ParamPoly& o);
    ParamPoly& operator-=(const ParamPoly& o);
    friend ParamPoly operator+(ParamPoly a, const ParamPoly& b) { a += b; return a; }
    friend ParamPoly operator-(ParamPoly a, const ParamPoly& b) { a -= b; return a; }
    friend ParamPoly operator*(const ParamPoly& a, const ParamPoly& b);
    ParamPoly& operator*=(const ParamPoly& o) { *this = *this * o; return *this; }
    ParamPoly& operator*=(const Cyclo& c);
    ParamPoly& operator*=(const Rational& r);

    bool operator==(const ParamPoly& o) const { return terms_ == o.terms_; }
    bool operator!=(const ParamPoly& o) const { return !(*this == o); }

    // Ring-homomorphism substitution of U variables: every U_i listed in
    // `map` (1-based) is replaced by the paired polynomial; other variables
    // are untouched.
    ParamPoly substitute_u(const std::vector<std::pair<unsigned, ParamPoly>>& map) const;
    // Exchange U_i and U_j.
    ParamPoly swap_u(unsigned i, unsigned j) const;
    // Apply a permutation to the U variables: U_j -> U_{perm[j-1]} (1-based images).
    ParamPoly permute_u(const std::vector<unsigned>& perm) const;
    // Whether any U variable occurs.
    bool depends_on_u() const;
    bool depends_on_var(unsigned var_index) const;

    // Exact quotient; throws NonDivisible if g does not divide exactly.
    friend ParamPoly exact_divide(const ParamPoly& f, const ParamPoly& g);
    // Division with remainder by a single divisor: f = q*g + r where no term
    // of r is divisible by the leading monomial of g.
    static void divide_qr(const ParamPoly& f, const ParamPoly& g, ParamPoly& quo, ParamPoly& rem);

    std::string str() const;

private:
    const Context* ctx_;
    TermMap terms_;
};

// GCD, monic in the leading coefficient; gcd(0,0) = 0.
ParamPoly poly_gcd(const ParamPoly& a, const ParamPoly& b);

} // namespace chered
