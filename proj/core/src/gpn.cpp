#include "chered/gpn.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace chered {

Perm::Perm(unsigned n) : img_(n) {
    std::iota(img_.begin(), img_.end(), 1u);
}

Perm::Perm(std::vector<unsigned> images) : img_(std::move(images)) {}

Perm Perm::transposition(unsigned n, unsigned i, unsigned j) {
    Perm p(n);
    std::swap(p.img_[i - 1], p.img_[j - 1]);
    return p;
}

Perm Perm::inverse() const {
    Perm r(size());
    for (unsigned i = 1; i <= size(); ++i) r.img_[img_[i - 1] - 1] = i;
    return r;
}

Perm operator*(const Perm& a, const Perm& b) {
    Perm r(a.size());
    for (unsigned i = 1; i <= a.size(); ++i) r.img_[i - 1] = a(b(i));
    return r;
}

bool Perm::is_identity() const {
    for (unsigned i = 1; i <= size(); ++i)
        if (img_[i - 1] != i) return false;
    return true;
}

std::vector<Perm> Perm::all(unsigned n) {
    std::vector<unsigned> img(n);
    std::iota(img.begin(), img.end(), 1u);
    std::vector<Perm> out;
    do {
        out.emplace_back(img);
    } while (std::next_permutation(img.begin(), img.end()));
    return out;
}

GPNElement::GPNElement(const Context* ctx, std::vector<uint16_t> texp, Perm perm)
    : ctx_(ctx), texp_(std::move(texp)), perm_(std::move(perm)) {
    if (texp_.size() != ctx_->n || perm_.size() != ctx_->n)
        throw std::invalid_argument("GPNElement: size mismatch");
    for (auto& e : texp_) e = static_cast<uint16_t>(e % ctx_->ell);
}

GPNElement GPNElement::identity(const Context& ctx) {
    return GPNElement(&ctx, std::vector<uint16_t>(ctx.n, 0), Perm(ctx.n));
}

GPNElement GPNElement::diagonal(const Context& ctx, unsigned i, long k) {
    std::vector<uint16_t> t(ctx.n, 0);
    long r = k % static_cast<long>(ctx.ell);
    if (r < 0) r += ctx.ell;
    t[i - 1] = static_cast<uint16_t>(r);
    return GPNElement(&ctx, std::move(t), Perm(ctx.n));
}

GPNElement GPNElement::transposition(const Context& ctx, unsigned i, unsigned j) {
    return GPNElement(&ctx, std::vector<uint16_t>(ctx.n, 0), Perm::transposition(ctx.n, i, j));
}

GPNElement GPNElement::reflection(const Context& ctx, unsigned i, unsigned j, long k) {
    std::vector<uint16_t> t(ctx.n, 0);
    long r = k % static_cast<long>(ctx.ell);
    if (r < 0) r += ctx.ell;
    t[i - 1] = static_cast<uint16_t>(r);
    t[j - 1] = static_cast<uint16_t>((ctx.ell - r) % ctx.ell);
    return GPNElement(&ctx, std::move(t), Perm::transposition(ctx.n, i, j));
}

bool GPNElement::in_gpn() const {
    unsigned total = 0;
    for (auto e : texp_) total += e;
    return total % ctx_->p == 0;
}

bool GPNElement::is_reflection() const {
    // A monomial matrix is a (complex) reflection iff its fixed space has
    // codimension 1: either a single diagonal entry is a nontrivial root of
    // unity, or the permutation is a transposition whose 2x2 block has
    // determinant with the right eigenvalues and everything else is fixed.
    const unsigned n = ctx_->n;
    if (perm_.is_identity()) {
        unsigned nontrivial = 0;
        for (auto e : texp_) nontrivial += (e != 0);
        return nontrivial == 1;
    }
    // permutation part must be a transposition (i j), all other positions fixed
    unsigned moved = 0, i = 0, j = 0;
    for (unsigned a = 1; a <= n; ++a) {
        if (perm_(a) != a) {
            ++moved;
            if (!i) i = a;
            else j = a;
        }
    }
    if (moved != 2 || perm_(i) != j || perm_(j) != i) return false;
    for (unsigned a = 1; a <= n; ++a) {
        if (a == i || a == j) continue;
        if (texp_[a - 1] != 0) return false;
    }
    // 2x2 block [[0, z^b],[z^a, 0]] fixes a line iff z^{a+b} = 1
    return (texp_[i - 1] + texp_[j - 1]) % ctx_->ell == 0;
}

GPNElement GPNElement::inverse() const {
    // (t^a w)^{-1} = t^{-w^{-1} a} w^{-1}
    Perm winv = perm_.inverse();
    std::vector<uint16_t> t(ctx_->n);
    for (unsigned i = 1; i <= ctx_->n; ++i) {
        // (w^{-1} a)_i = a_{w(i)}
        uint16_t ai = texp_[perm_(i) - 1];
        t[i - 1] = static_cast<uint16_t>((ctx_->ell - ai) % ctx_->ell);
    }
    return GPNElement(ctx_, std::move(t), std::move(winv));
}

GPNElement operator*(const GPNElement& g, const GPNElement& h) {
    if (g.ctx_ != h.ctx_ || g.ctx_->ell != h.ctx_->ell || g.ctx_->n != h.ctx_->n)
        throw std::invalid_argument("GPNElement product: mismatched parameters");
    const Context& ctx = *g.ctx_;
    // t^a w * t^b v = t^{a + w.b} (w v), (w.b)_i = b_{w^{-1}(i)}
    Perm winv = g.perm_.inverse();
    std::vector<uint16_t> t(ctx.n);
    for (unsigned i = 1; i <= ctx.n; ++i) {
        t[i - 1] = static_cast<uint16_t>((g.texp_[i - 1] + h.texp_[winv(i) - 1]) % ctx.ell);
    }
    return GPNElement(&ctx, std::move(t), g.perm_ * h.perm_);
}

GPNElement GPNElement::conjugate(const GPNElement& by) const {
    return by * (*this) * by.inverse();
}

std::vector<GPNElement> enumerate_reflections(const Context& ctx) {
    std::vector<GPNElement> out;
    for (unsigned i = 1; i <= ctx.n; ++i) {
        for (unsigned j = i + 1; j <= ctx.n; ++j) {
            for (unsigned k = 0; k < ctx.ell; ++k) {
                out.push_back(GPNElement::reflection(ctx, i, j, k));
            }
        }
    }
    for (unsigned i = 1; i <= ctx.n; ++i) {
        for (unsigned k = 1; k < ctx.q; ++k) {
            out.push_back(GPNElement::diagonal(ctx, i, static_cast<long>(k) * ctx.p));
        }
    }
    return out;
}

std::vector<std::vector<uint16_t>> enumerate_diagonal(const Context& ctx) {
    std::vector<std::vector<uint16_t>> out;
    std::vector<uint16_t> cur(ctx.n, 0);
    while (true) {
        unsigned total = 0;
        for (auto e : cur) total += e;
        if (total % ctx.p == 0) out.push_back(cur);
        unsigned i = 0;
        while (i < ctx.n) {
            if (++cur[i] < ctx.ell) break;
            cur[i] = 0;
            ++i;
        }
        if (i == ctx.n) break;
    }
    return out;
}

std::vector<GPNElement> enumerate_group(const Context& ctx) {
    std::vector<GPNElement> out;
    auto diag = enumerate_diagonal(ctx);
    auto perms = Perm::all(ctx.n);
    for (const auto& a : diag) {
        for (const auto& w : perms) {
            out.emplace_back(&ctx, a, w);
        }
    }
    return out;
}

} // namespace chered
