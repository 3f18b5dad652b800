#pragma once

#include <cstdint>
#include <memory>
#include <string>
#include <vector>

#include "chered/cyclotomic.hpp"

namespace chered {

class ParamPoly;

// Single-rule mutations used by the sensitivity suite. All off in normal
// operation; each one breaks exactly one action or dictionary rule.
struct Mutations {
    bool sigma_drop_hbar = false;     // sigma: omit the +hbar in the multiplier
    bool xsigma_drop_factor = false;  // closed form of x_1^{l-1} sigma: drop one product factor
    bool tau_flip_shift = false;      // tau: U_1 -> U_n + hbar instead of U_n - hbar
    bool swap_drop_pi = false;        // (i,i+1): divided difference without the pi spreading
    bool dict_drop_correction = false;// dictionary image of (i,i+1): drop the scalar correction term
};

// Everything fixed by the choice of (ell, p, n): the cyclotomic field, the
// variable table for polynomial arithmetic, and the deformation-parameter
// calculus. Values of the arithmetic types keep a pointer to their context;
// contexts must outlive the values created from them.
//
// Variable order (also the monomial order precedence, largest first):
//   U_1 > ... > U_n > hbar > kappa > s_0 > ... > s_{ell/p - 1}
class Context {
public:
    static std::shared_ptr<const Context> make(unsigned ell, unsigned p, unsigned n,
                                               Mutations mutations = {});

    unsigned ell;
    unsigned p;
    unsigned n;
    unsigned q;        // ell / p
    unsigned num_vars; // n + 2 + q
    Mutations mut;

    unsigned u_index(unsigned i) const { return i - 1; } // i in 1..n
    unsigned hbar_index() const { return n; }
    unsigned kappa_index() const { return n + 1; }
    unsigned s_index(unsigned m) const { return n + 2 + m; } // m in 0..q-1

    const std::string& var_name(unsigned idx) const { return names_[idx]; }

    Cyclo czero() const { return Cyclo::zero(ell); }
    Cyclo cone() const { return Cyclo::one(ell); }
    Cyclo zeta(long k) const { return Cyclo::zeta(ell, k); }

    // s_m for arbitrary m >= 0, resolved structurally:
    //   s_m = s_{m mod q} + floor(m/q) * (ell/p) * hbar.
    ParamPoly s_struct(unsigned m) const;
    // h_r = s_r - r*hbar (periodic in r mod ell by construction).
    ParamPoly h_struct(unsigned r) const;
    // Coefficients c_k, k = 0..ell-1, of the multiplier polynomial:
    // inverse Fourier transform of (h_0, ..., h_{ell-1}).
    const std::vector<ParamPoly>& c_coeffs() const;

    ~Context();

private:
    Context(unsigned ell, unsigned p, unsigned n, Mutations mutations);
    std::vector<std::string> names_;
    mutable std::vector<ParamPoly> c_cache_;
};

using ContextPtr = std::shared_ptr<const Context>;

} // namespace chered
