#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "chered/gpn.hpp"
#include "chered/parampoly.hpp"

namespace chered {

// Exponent vector of the T variables, entries in Z/ell.
using TExp = std::vector<uint16_t>;

// Element of the polynomial representation: a finite sum of terms
// c(U; params) * T^t, stored per T-monomial. For p != 1 the public subring
// consists of the elements with sum(texp) = 0 mod p on every term; single
// sigma/tau applications may leave it, which in_subring() detects.
class PolyRepElement {
public:
    PolyRepElement() : ctx_(nullptr) {}
    explicit PolyRepElement(const Context* ctx) : ctx_(ctx) {}

    static PolyRepElement zero(const Context& ctx) { return PolyRepElement(&ctx); }
    static PolyRepElement from_poly(const ParamPoly& p);
    static PolyRepElement monomial(const Context& ctx, const std::vector<unsigned>& uexp,
                                   const TExp& texp);

    const Context* context() const { return ctx_; }
    const std::map<TExp, ParamPoly>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    bool in_subring() const;
    // The coefficient of T^0; the whole element must be T-free for
    // polynomial extraction to make sense (checked by is_t_free()).
    bool is_t_free() const;
    ParamPoly t_free_part() const;

    void add_term(const TExp& t, const ParamPoly& c);

    PolyRepElement operator-() const;
    PolyRepElement& operator+=(const PolyRepElement& o);
    PolyRepElement& operator-=(const PolyRepElement& o);
    friend PolyRepElement operator+(PolyRepElement a, const PolyRepElement& b) { a += b; return a; }
    friend PolyRepElement operator-(PolyRepElement a, const PolyRepElement& b) { a -= b; return a; }
    PolyRepElement scaled(const ParamPoly& c) const;
    PolyRepElement scaled(const Cyclo& c) const;
    PolyRepElement scaled(const Rational& r) const;

    bool operator==(const PolyRepElement& o) const { return terms_ == o.terms_; }
    bool operator!=(const PolyRepElement& o) const { return !(*this == o); }

    std::string str() const;

private:
    const Context* ctx_;
    std::map<TExp, ParamPoly> terms_;
};

// Generators of the presentation acting on the representation.
struct Generator {
    enum Kind : uint8_t { U, T, Swap, Sigma, Tau };
    Kind kind;
    unsigned index; // 1-based; unused for Sigma/Tau

    static Generator u(unsigned i) { return {U, i}; }
    static Generator t(unsigned i) { return {T, i}; }
    static Generator swap(unsigned i) { return {Swap, i}; }
    static Generator sigma() { return {Sigma, 0}; }
    static Generator tau() { return {Tau, 0}; }

    bool operator==(const Generator& o) const { return kind == o.kind && index == o.index; }
    std::string str() const;
};

// A word in the generators, written in algebra order: the LAST generator in
// the list acts first (operators compose right-to-left).
using Word = std::vector<Generator>;

std::string word_str(const Word& w);

// Single-generator action. Throws std::out_of_range for invalid indices and
// NonDivisible if an internal divided difference fails (which cannot happen
// for well-formed inputs unless a mutation is active).
PolyRepElement act_gen(const Generator& g, const PolyRepElement& f);
PolyRepElement act_word(const Word& w, const PolyRepElement& f);

// Multiplication by the T-monomial T^t (the action of the diagonal group
// element t^texp).
PolyRepElement act_tmono(const TExp& t, const PolyRepElement& f);

// The substitution action T_j -> zeta^{a_j} T_j of the diagonal group,
// extended to the linear action f^g of any group element (permutation of the
// (U_j, T_j) pairs followed by the diagonal substitution).
PolyRepElement subst_t(const TExp& a, const PolyRepElement& f);
PolyRepElement linear_act(const GPNElement& g, const PolyRepElement& f);

// Multiplication by pi_{i,i+1} = (1/ell) sum_k T_i^k T_{i+1}^{-k}.
PolyRepElement pi_mult(unsigned i, const PolyRepElement& f);

// Multiplication by p(zeta^a T_i) = sum_k c_k zeta^{ak} T_i^k.
PolyRepElement p_of_t_mult(unsigned i, long a, const PolyRepElement& f);

// The words realizing the standard generators:
//   x_i = (i,...,1) sigma (n,...,i),  y_i = (i,...,n) tau (1,...,i),
// with cycles expanded into adjacent transpositions.
enum class StandardKind { X, Y };
Word standard_gen_word(StandardKind kind, unsigned i, const Context& ctx);

// The idempotent E' = e' * 1: the normalized sum of T^a over the diagonal
// subgroup A.
PolyRepElement eprime_element(const Context& ctx);
// Multiplication by E'.
PolyRepElement mul_eprime(const PolyRepElement& f);

// e' as a projection: the average of the substitution action of A. A term
// T^t survives iff t pairs trivially with every element of A, i.e.
// t = m*(ell/p)*(1,...,1). The fast character test and the brute-force
// average agree (tested).
PolyRepElement project_e_prime(const PolyRepElement& f);
PolyRepElement project_e_prime_brute(const PolyRepElement& f);

// e as the W-average: diagonal part by substitution, S_n part through the
// (i,i+1) action rule. Intended for small groups.
PolyRepElement project_e(const PolyRepElement& f);

// Reduced word for a permutation in terms of Swap generators, such that
// act_word(word, f) applies the permutation's linear action on a T-free f.
Word perm_word(const Perm& w);

} // namespace chered
