#pragma once

#include <string>
#include <vector>

#include "chered/polyrep.hpp"
#include "chered/ratfunc.hpp"
#include "chered/report.hpp"

namespace chered {

// Distinguished generators of the partially spherical subalgebra.
struct PsphGenerator {
    enum Kind : uint8_t {
        UGen,       // u_i
        SwapGen,    // (i,i+1)
        XSigma,     // x_1^{ell-1} sigma
        YTau,       // y_n^{ell-1} tau
        SigmaPower, // sigma^{n ell / p}
        TauPower,   // tau^{n ell / p}
        Mixed,      // (x_1^{k ell/p - 1} sigma)^i (y_{n-i}^{ell - k ell/p - 1} (n-i,...,n) tau)^{n-i}
    };
    Kind kind;
    unsigned i = 0; // UGen/SwapGen index, or the Mixed block split
    unsigned k = 0; // Mixed winding multiplicity, 1 <= k <= p-1

    static PsphGenerator u(unsigned i) { return {UGen, i, 0}; }
    static PsphGenerator swap(unsigned i) { return {SwapGen, i, 0}; }
    static PsphGenerator xsigma() { return {XSigma, 0, 0}; }
    static PsphGenerator ytau() { return {YTau, 0, 0}; }
    static PsphGenerator sigma_power() { return {SigmaPower, 0, 0}; }
    static PsphGenerator tau_power() { return {TauPower, 0, 0}; }
    static PsphGenerator mixed(unsigned i, unsigned k) { return {Mixed, i, k}; }

    std::string str() const;
};

// Every generator valid for the context, in a fixed order.
std::vector<PsphGenerator> all_psph_generators(const Context& ctx);

// The defining word in the presentation generators (x/y expanded).
Word word_for(const PsphGenerator& g, const Context& ctx);

// Z/p degree of the generator (the common strand winding in ell/p units).
unsigned zp_degree(const PsphGenerator& g, const Context& ctx);

// Net index shift of a word: (#sigma - #tau). For a psph generator word this
// equals the total translation of its skew-ring image in hbar units.
long word_index_shift(const Word& w);

// Closed-form action on rational functions in the U variables. Output of a
// polynomial input is again polynomial (the principality property).
RatFunc closed_form_action(const PsphGenerator& g, const RatFunc& f, const Context& ctx);
// Polynomial specialization; throws std::domain_error if the result fails to
// be polynomial (it never does for the unmutated rules).
ParamPoly closed_form_action(const PsphGenerator& g, const ParamPoly& f, const Context& ctx);

// Places a U-polynomial into the representation as f * E'.
PolyRepElement embed_upoly(const ParamPoly& f, const Context& ctx);

// The independent word-composition oracle: true iff
//   e' . act_word(word_for(g), f * E') == closed_form_action(g, f) * E'
// exactly in the representation (e' acting as the algebra idempotent, i.e.
// multiplication by E').
bool oracle_compare(const PsphGenerator& g, const ParamPoly& f, const Context& ctx);

// Oracle sweep over all generators and all U-monomials of degree <= maxdeg.
Report psph_oracle_report(const Context& ctx, unsigned maxdeg);

// U-monomials of total degree <= maxdeg as ParamPolys.
std::vector<ParamPoly> u_monomials(const Context& ctx, unsigned maxdeg);

} // namespace chered
