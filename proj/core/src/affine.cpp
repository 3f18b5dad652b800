#include "chered/affine.hpp"

#include <stdexcept>

namespace chered {

bool lattice_member(const std::vector<long>& v, const Context& ctx) {
    if (v.size() != ctx.n) throw std::invalid_argument("lattice_member: wrong length");
    long ell = static_cast<long>(ctx.ell);
    long q = static_cast<long>(ctx.q);
    // v = ell*a + b*q*(1,...,1): all entries congruent mod ell and the common
    // residue a multiple of ell/p.
    long r0 = ((v[0] % ell) + ell) % ell;
    for (auto x : v) {
        if ((((x % ell) + ell) % ell) != r0) return false;
    }
    return r0 % q == 0;
}

AffineElement::AffineElement(const Context* ctx, std::vector<long> shift, Perm perm)
    : ctx_(ctx), shift_(std::move(shift)), perm_(std::move(perm)) {
    if (shift_.size() != ctx_->n || perm_.size() != ctx_->n)
        throw std::invalid_argument("AffineElement: size mismatch");
    if (!lattice_member(shift_, *ctx_))
        throw std::invalid_argument("AffineElement: shift outside the translation lattice");
}

AffineElement AffineElement::identity(const Context& ctx) {
    return AffineElement(&ctx, std::vector<long>(ctx.n, 0), Perm(ctx.n));
}

AffineElement AffineElement::mu(const Context& ctx, unsigned i, long k) {
    std::vector<long> s(ctx.n, 0);
    s[i - 1] = k;
    return AffineElement(&ctx, std::move(s), Perm(ctx.n));
}

AffineElement AffineElement::mu_all(const Context& ctx, long k) {
    return AffineElement(&ctx, std::vector<long>(ctx.n, k), Perm(ctx.n));
}

AffineElement AffineElement::transposition(const Context& ctx, unsigned i, unsigned j) {
    return AffineElement(&ctx, std::vector<long>(ctx.n, 0), Perm::transposition(ctx.n, i, j));
}

long AffineElement::total_shift() const {
    long t = 0;
    for (auto s : shift_) t += s;
    return t;
}

AffineElement AffineElement::inverse() const {
    // (mu^s w)^{-1} = mu^{-w^{-1} s} w^{-1}
    Perm winv = perm_.inverse();
    std::vector<long> s(ctx_->n);
    for (unsigned i = 1; i <= ctx_->n; ++i) s[i - 1] = -shift_[perm_(i) - 1];
    return AffineElement(ctx_, std::move(s), std::move(winv));
}

AffineElement operator*(const AffineElement& g, const AffineElement& h) {
    if (g.ctx_ != h.ctx_) throw std::invalid_argument("AffineElement product: mismatched contexts");
    const Context& ctx = *g.ctx_;
    // mu^a w * mu^b v = mu^{a + w.b} (w v), (w.b)_i = b_{w^{-1}(i)}
    Perm winv = g.perm_.inverse();
    std::vector<long> s(ctx.n);
    for (unsigned i = 1; i <= ctx.n; ++i) s[i - 1] = g.shift_[i - 1] + h.shift_[winv(i) - 1];
    return AffineElement(&ctx, std::move(s), g.perm_ * h.perm_);
}

RatFunc affine_act(const AffineElement& g, const RatFunc& f) {
    const Context& ctx = *g.context();
    std::vector<std::pair<unsigned, ParamPoly>> map;
    map.reserve(ctx.n);
    for (unsigned j = 1; j <= ctx.n; ++j) {
        unsigned tgt = g.perm()(j);
        long sh = g.shift()[tgt - 1];
        ParamPoly rep = ParamPoly::u(ctx, tgt);
        if (sh != 0) {
            ParamPoly t = ParamPoly::hbar(ctx);
            t *= Rational(sh);
            rep += t;
        }
        map.emplace_back(j, std::move(rep));
    }
    return f.substitute_u(map);
}

ParamPoly affine_act(const AffineElement& g, const ParamPoly& f) {
    const Context& ctx = *g.context();
    std::vector<std::pair<unsigned, ParamPoly>> map;
    map.reserve(ctx.n);
    for (unsigned j = 1; j <= ctx.n; ++j) {
        unsigned tgt = g.perm()(j);
        long sh = g.shift()[tgt - 1];
        ParamPoly rep = ParamPoly::u(ctx, tgt);
        if (sh != 0) {
            ParamPoly t = ParamPoly::hbar(ctx);
            t *= Rational(sh);
            rep += t;
        }
        map.emplace_back(j, std::move(rep));
    }
    return f.substitute_u(map);
}

} // namespace chered
