#include "chered/context.hpp"

#include <stdexcept>

#include "chered/parampoly.hpp"

namespace chered {

Context::Context(unsigned ell_, unsigned p_, unsigned n_, Mutations mutations)
    : ell(ell_), p(p_), n(n_), q(ell_ / p_), num_vars(n_ + 2 + ell_ / p_), mut(mutations) {
    if (ell == 0 || p == 0 || n == 0) throw std::invalid_argument("parameters must be positive");
    if (ell % p != 0) throw std::invalid_argument("p must divide ell");
    CycloField::get(ell); // force table construction up front
    names_.resize(num_vars);
    for (unsigned i = 1; i <= n; ++i) names_[u_index(i)] = "U" + std::to_string(i);
    names_[hbar_index()] = "h";
    names_[kappa_index()] = "k";
    for (unsigned m = 0; m < q; ++m) names_[s_index(m)] = "s" + std::to_string(m);
}

Context::~Context() = default;

std::shared_ptr<const Context> Context::make(unsigned ell, unsigned p, unsigned n,
                                             Mutations mutations) {
    std::shared_ptr<const Context> ctx(new Context(ell, p, n, mutations));
    ctx->c_coeffs(); // fill the cache before the context is shared across threads
    return ctx;
}

ParamPoly Context::s_struct(unsigned m) const {
    ParamPoly base = ParamPoly::s(*this, m % q);
    unsigned j = m / q;
    if (j) {
        ParamPoly shift = ParamPoly::hbar(*this);
        shift *= Rational(static_cast<long>(j) * static_cast<long>(ell), p);
        base += shift;
    }
    return base;
}

ParamPoly Context::h_struct(unsigned r) const {
    ParamPoly h = s_struct(r);
    ParamPoly rh = ParamPoly::hbar(*this);
    rh *= Rational(r);
    h -= rh;
    return h;
}

const std::vector<ParamPoly>& Context::c_coeffs() const {
    if (!c_cache_.empty()) return c_cache_;
    std::vector<ParamPoly> cs;
    cs.reserve(ell);
    std::vector<ParamPoly> hs;
    hs.reserve(ell);
    for (unsigned r = 0; r < ell; ++r) hs.push_back(h_struct(r));
    for (unsigned k = 0; k < ell; ++k) {
        ParamPoly acc(this);
        for (unsigned r = 0; r < ell; ++r) {
            ParamPoly t = hs[r];
            t *= zeta(-static_cast<long>(r) * static_cast<long>(k));
            acc += t;
        }
        acc *= Rational(1, ell);
        cs.push_back(std::move(acc));
    }
    c_cache_ = std::move(cs);
    return c_cache_;
}

} // namespace chered
