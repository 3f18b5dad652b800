#pragma once

#include <vector>

#include "chered/gpn.hpp"
#include "chered/ratfunc.hpp"

namespace chered {

// Membership of an integer vector in the translation lattice
// T = < ell*e_1, ..., ell*e_n, (ell/p)*(1,...,1) >.
bool lattice_member(const std::vector<long>& v, const Context& ctx);

// Element mu^shift * w of the extended affine group T x| S_n, acting on
// rational functions in the U variables by
//   U_j -> U_{w(j)} + shift_{w(j)} * hbar.
// shifts are integer multiples of hbar; the constructor enforces lattice
// membership of the shift vector.
class AffineElement {
public:
    AffineElement() = default;
    AffineElement(const Context* ctx, std::vector<long> shift, Perm perm);
    static AffineElement identity(const Context& ctx);
    static AffineElement mu(const Context& ctx, unsigned i, long k);   // mu_i^k, ell | k
    static AffineElement mu_all(const Context& ctx, long k);           // (mu_1...mu_n)^k, (ell/p) | k
    static AffineElement transposition(const Context& ctx, unsigned i, unsigned j);

    const Context* context() const { return ctx_; }
    const std::vector<long>& shift() const { return shift_; }
    const Perm& perm() const { return perm_; }
    long total_shift() const;

    AffineElement inverse() const;
    // Composition of automorphisms: (g*h)(f) = g(h(f)).
    friend AffineElement operator*(const AffineElement& g, const AffineElement& h);

    bool operator==(const AffineElement& o) const {
        return shift_ == o.shift_ && perm_ == o.perm_;
    }
    bool operator<(const AffineElement& o) const {
        if (shift_ != o.shift_) return shift_ < o.shift_;
        return perm_ < o.perm_;
    }

private:
    const Context* ctx_ = nullptr;
    std::vector<long> shift_;
    Perm perm_;
};

RatFunc affine_act(const AffineElement& g, const RatFunc& f);
ParamPoly affine_act(const AffineElement& g, const ParamPoly& f);

} // namespace chered
