#include "chered/params.hpp"

#include <stdexcept>

namespace chered {

std::vector<ParamPoly> fourier_c_to_h(const std::vector<ParamPoly>& c, const Context& ctx) {
    if (c.size() != ctx.ell - 1) throw std::invalid_argument("c-vector must have length ell-1");
    std::vector<ParamPoly> h;
    h.reserve(ctx.ell);
    for (unsigned r = 0; r < ctx.ell; ++r) {
        ParamPoly acc(&ctx);
        for (unsigned s = 1; s < ctx.ell; ++s) {
            ParamPoly t = c[s - 1];
            t *= ctx.zeta(static_cast<long>(r) * static_cast<long>(s));
            acc += t;
        }
        h.push_back(std::move(acc));
    }
    return h;
}

std::vector<ParamPoly> fourier_h_to_c(const std::vector<ParamPoly>& h, const Context& ctx) {
    if (h.size() != ctx.ell) throw std::invalid_argument("h-vector must have length ell");
    std::vector<ParamPoly> c;
    c.reserve(ctx.ell - 1);
    for (unsigned s = 1; s < ctx.ell; ++s) {
        ParamPoly acc(&ctx);
        for (unsigned r = 0; r < ctx.ell; ++r) {
            ParamPoly t = h[r];
            t *= ctx.zeta(-static_cast<long>(r) * static_cast<long>(s));
            acc += t;
        }
        acc *= Rational(1, ctx.ell);
        c.push_back(std::move(acc));
    }
    return c;
}

PCyclicResult p_cyclic_check(const std::vector<ParamPoly>& vec, ParamKind kind,
                             const Context& ctx) {
    const unsigned ell = ctx.ell, p = ctx.p, q = ctx.q;
    std::vector<ParamPoly> c, h, s;
    switch (kind) {
    case ParamKind::C: {
        if (vec.size() != ell - 1) throw std::invalid_argument("c-vector must have length ell-1");
        c = vec;
        h = fourier_c_to_h(c, ctx);
        break;
    }
    case ParamKind::H: {
        if (vec.size() != ell) throw std::invalid_argument("h-vector must have length ell");
        h = vec;
        c = fourier_h_to_c(h, ctx);
        break;
    }
    case ParamKind::S: {
        if (vec.size() != ell) throw std::invalid_argument("s-vector must have length ell");
        s = vec;
        h.reserve(ell);
        for (unsigned m = 0; m < ell; ++m) {
            ParamPoly hm = s[m];
            ParamPoly mh = ParamPoly::hbar(ctx);
            mh *= Rational(m);
            hm -= mh;
            h.push_back(std::move(hm));
        }
        c = fourier_h_to_c(h, ctx);
        break;
    }
    }
    if (s.empty()) {
        s.reserve(ell);
        for (unsigned m = 0; m < ell; ++m) {
            ParamPoly sm = h[m];
            ParamPoly mh = ParamPoly::hbar(ctx);
            mh *= Rational(m);
            sm += mh;
            s.push_back(std::move(sm));
        }
    }

    PCyclicResult res{};
    res.cond_c = true;
    for (unsigned k = 1; k < ell; ++k) {
        if (k % p != 0 && !c[k - 1].is_zero()) { res.cond_c = false; break; }
    }
    res.cond_h = true;
    for (unsigned r = 0; r < ell; ++r) {
        if (h[r] != h[(r + q) % ell]) { res.cond_h = false; break; }
    }
    // s_{m + q} for m + q >= ell resolves through the h-periodicity ansatz:
    // s_{m+q} = h_{(m+q) mod ell} + (m+q) hbar.
    res.cond_s = true;
    for (unsigned m = 0; m < ell; ++m) {
        ParamPoly lhs = s[m];
        ParamPoly shift = ParamPoly::hbar(ctx);
        shift *= Rational(ell, p);
        lhs += shift;
        ParamPoly rhs = h[(m + q) % ell];
        ParamPoly mh = ParamPoly::hbar(ctx);
        mh *= Rational(m + q);
        rhs += mh;
        if (lhs != rhs) { res.cond_s = false; break; }
    }
    res.equivalent = (res.cond_c == res.cond_h) && (res.cond_h == res.cond_s);
    return res;
}

} // namespace chered
