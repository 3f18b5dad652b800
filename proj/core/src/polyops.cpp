#include "chered/parampoly.hpp"

#include <algorithm>
#include <optional>

// Multivariate gcd over Q(zeta_ell) via primitive PRS: recurse on the main
// variable, treating the polynomial as univariate with polynomial
// coefficients, taking contents recursively.

namespace chered {

namespace {

// Univariate view of a ParamPoly in variable `var`: coefficient polynomials
// indexed by degree (sparse).
struct UniView {
    std::vector<ParamPoly> coeff; // index = degree in var
    int deg() const { return static_cast<int>(coeff.size()) - 1; }
};

UniView to_uni(const ParamPoly& f, unsigned var) {
    UniView v;
    const Context& ctx = *f.context();
    for (const auto& [m, c] : f.terms()) {
        unsigned d = m[var];
        if (v.coeff.size() <= d) v.coeff.resize(d + 1, ParamPoly(&ctx));
        Monomial mm = m;
        mm[var] = 0;
        v.coeff[d].add_term(mm, c);
    }
    while (!v.coeff.empty() && v.coeff.back().is_zero()) v.coeff.pop_back();
    return v;
}

ParamPoly from_uni(const UniView& v, unsigned var, const Context& ctx) {
    ParamPoly out(&ctx);
    for (size_t d = 0; d < v.coeff.size(); ++d) {
        if (v.coeff[d].is_zero()) continue;
        ParamPoly xd = ParamPoly::variable(ctx, var, static_cast<unsigned>(d));
        out += v.coeff[d] * xd;
    }
    return out;
}

std::vector<unsigned> used_vars(const ParamPoly& f) {
    std::vector<unsigned> used;
    if (f.is_zero()) return used;
    size_t nv = f.terms().begin()->first.size();
    std::vector<bool> seen(nv, false);
    for (const auto& [m, c] : f.terms())
        for (size_t i = 0; i < nv; ++i)
            if (m[i]) seen[i] = true;
    for (size_t i = 0; i < nv; ++i)
        if (seen[i]) used.push_back(static_cast<unsigned>(i));
    return used;
}

ParamPoly make_monic(ParamPoly f) {
    if (f.is_zero()) return f;
    Cyclo inv = f.leading_coeff().inverse();
    f *= inv;
    return f;
}

// Pseudo-remainder of a by b in variable var: lc(b)^(da-db+1) * a mod b.
UniView pseudo_rem(const UniView& a, const UniView& b, const Context& ctx) {
    UniView r = a;
    const ParamPoly& lb = b.coeff.back();
    int db = b.deg();
    while (r.deg() >= db && !(r.coeff.empty())) {
        int dr = r.deg();
        ParamPoly lr = r.coeff.back();
        // r = lb * r - lr * x^(dr-db) * b
        for (auto& c : r.coeff) c = c * lb;
        for (int i = 0; i <= db; ++i) {
            r.coeff[i + dr - db] -= lr * b.coeff[i];
        }
        while (!r.coeff.empty() && r.coeff.back().is_zero()) r.coeff.pop_back();
        if (r.coeff.empty()) break;
    }
    return r;
}

ParamPoly gcd_impl(const ParamPoly& a, const ParamPoly& b);

// gcd of a list of polynomials (used for contents).
ParamPoly gcd_list(const std::vector<ParamPoly>& polys) {
    ParamPoly g;
    bool started = false;
    for (const auto& p : polys) {
        if (p.is_zero()) continue;
        if (!started) {
            g = p;
            started = true;
        } else {
            g = gcd_impl(g, p);
        }
        if (g.is_constant() && !g.is_zero()) return make_monic(g);
    }
    if (!started) return ParamPoly();
    return g;
}

// Extract the largest common monomial factor of all terms.
Monomial monomial_content(const ParamPoly& f) {
    Monomial mc;
    bool first = true;
    for (const auto& [m, c] : f.terms()) {
        if (first) {
            mc = m;
            first = false;
        } else {
            for (size_t i = 0; i < mc.size(); ++i) mc[i] = std::min(mc[i], m[i]);
        }
        if (total_degree(mc) == 0) break;
    }
    return mc;
}

ParamPoly divide_monomial(const ParamPoly& f, const Monomial& mc) {
    if (total_degree(mc) == 0) return f;
    ParamPoly out(f.context());
    for (const auto& [m, c] : f.terms()) {
        Monomial mm = m;
        for (size_t i = 0; i < mm.size(); ++i) mm[i] = static_cast<uint16_t>(mm[i] - mc[i]);
        out.add_term(mm, c);
    }
    return out;
}

ParamPoly gcd_impl(const ParamPoly& a, const ParamPoly& b) {
    if (a.is_zero()) return make_monic(b);
    if (b.is_zero()) return make_monic(a);
    const Context& ctx = *(a.context() ? a.context() : b.context());

    // Common monomial factor first; it is cheap and frequent.
    Monomial ma = monomial_content(a), mb = monomial_content(b);
    Monomial mg(ma.size());
    for (size_t i = 0; i < mg.size(); ++i) mg[i] = std::min(ma[i], mb[i]);
    ParamPoly fa = divide_monomial(a, ma);
    ParamPoly fb = divide_monomial(b, mb);
    ParamPoly mono_part = ParamPoly::constant(ctx, ctx.cone());
    for (size_t i = 0; i < mg.size(); ++i)
        if (mg[i]) mono_part *= ParamPoly::variable(ctx, static_cast<unsigned>(i), mg[i]);

    if (fa.is_constant() || fb.is_constant()) return make_monic(mono_part);

    // Cheap path: one argument exactly divides the other.
    {
        const ParamPoly& small = (fa.degree() <= fb.degree()) ? fa : fb;
        const ParamPoly& large = (fa.degree() <= fb.degree()) ? fb : fa;
        ParamPoly q, r;
        ParamPoly::divide_qr(large, small, q, r);
        if (r.is_zero()) return make_monic(mono_part * small);
    }

    std::vector<unsigned> va = used_vars(fa), vb = used_vars(fb);
    std::vector<unsigned> common;
    std::set_intersection(va.begin(), va.end(), vb.begin(), vb.end(), std::back_inserter(common));
    if (common.empty()) return make_monic(mono_part);

    unsigned var = common.back();

    UniView ua = to_uni(fa, var), ub = to_uni(fb, var);
    ParamPoly ca = gcd_list(ua.coeff), cb = gcd_list(ub.coeff);
    ParamPoly cont = gcd_impl(ca, cb);
    // primitive parts
    for (auto& c : ua.coeff)
        if (!c.is_zero()) c = exact_divide(c, ca);
    for (auto& c : ub.coeff)
        if (!c.is_zero()) c = exact_divide(c, cb);

    if (ua.deg() < ub.deg()) std::swap(ua, ub);
    while (true) {
        if (ub.coeff.empty()) break;
        if (ub.deg() == 0) {
            // primitive nonzero constant-in-var: gcd of primitive parts is its content (a unit here)
            ub.coeff.clear();
            ua.coeff.clear();
            ua.coeff.push_back(ParamPoly::constant(ctx, ctx.cone()));
            break;
        }
        UniView r = pseudo_rem(ua, ub, ctx);
        ua = std::move(ub);
        ub = std::move(r);
        if (!ub.coeff.empty()) {
            ParamPoly c = gcd_list(ub.coeff);
            for (auto& cc : ub.coeff)
                if (!cc.is_zero()) cc = exact_divide(cc, c);
        }
    }
    ParamPoly pp = from_uni(ua, var, ctx);
    return make_monic(mono_part * cont * pp);
}

} // namespace

ParamPoly poly_gcd(const ParamPoly& a, const ParamPoly& b) {
    return gcd_impl(a, b);
}

} // namespace chered
