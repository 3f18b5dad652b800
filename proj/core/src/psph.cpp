#include "chered/psph.hpp"

#include <chrono>
#include <stdexcept>

namespace chered {

std::string PsphGenerator::str() const {
    switch (kind) {
    case UGen: return "u" + std::to_string(i);
    case SwapGen: return "swap" + std::to_string(i);
    case XSigma: return "xsigma";
    case YTau: return "ytau";
    case SigmaPower: return "sigma_power";
    case TauPower: return "tau_power";
    case Mixed: return "mixed(" + std::to_string(i) + "," + std::to_string(k) + ")";
    }
    return "?";
}

std::vector<PsphGenerator> all_psph_generators(const Context& ctx) {
    std::vector<PsphGenerator> out;
    for (unsigned i = 1; i <= ctx.n; ++i) out.push_back(PsphGenerator::u(i));
    for (unsigned i = 1; i + 1 <= ctx.n; ++i) out.push_back(PsphGenerator::swap(i));
    out.push_back(PsphGenerator::xsigma());
    out.push_back(PsphGenerator::ytau());
    out.push_back(PsphGenerator::sigma_power());
    out.push_back(PsphGenerator::tau_power());
    for (unsigned i = 1; i + 1 <= ctx.n; ++i) {
        for (unsigned k = 1; k < ctx.p; ++k) out.push_back(PsphGenerator::mixed(i, k));
    }
    return out;
}

Word word_for(const PsphGenerator& g, const Context& ctx) {
    const unsigned n = ctx.n, ell = ctx.ell, q = ctx.q;
    auto append = [](Word& w, const Word& part) {
        w.insert(w.end(), part.begin(), part.end());
    };
    Word w;
    switch (g.kind) {
    case PsphGenerator::UGen:
        return {Generator::u(g.i)};
    case PsphGenerator::SwapGen:
        return {Generator::swap(g.i)};
    case PsphGenerator::XSigma: {
        Word x1 = standard_gen_word(StandardKind::X, 1, ctx);
        for (unsigned r = 0; r + 1 < ell; ++r) append(w, x1);
        w.push_back(Generator::sigma());
        return w;
    }
    case PsphGenerator::YTau: {
        Word yn = standard_gen_word(StandardKind::Y, n, ctx);
        for (unsigned r = 0; r + 1 < ell; ++r) append(w, yn);
        w.push_back(Generator::tau());
        return w;
    }
    case PsphGenerator::SigmaPower:
        w.assign(n * q, Generator::sigma());
        return w;
    case PsphGenerator::TauPower:
        w.assign(n * q, Generator::tau());
        return w;
    case PsphGenerator::Mixed: {
        const unsigned i = g.i, k = g.k;
        Word xblock;
        {
            Word x1 = standard_gen_word(StandardKind::X, 1, ctx);
            for (unsigned r = 0; r + 1 < k * q; ++r) append(xblock, x1);
            xblock.push_back(Generator::sigma());
        }
        Word yblock;
        {
            Word ym = standard_gen_word(StandardKind::Y, n - i, ctx);
            for (unsigned r = 0; r + 1 < ell - k * q; ++r) append(yblock, ym);
            // the cycle (n-i, ..., n)
            for (unsigned j = n - i; j < n; ++j) yblock.push_back(Generator::swap(j));
            yblock.push_back(Generator::tau());
        }
        for (unsigned r = 0; r < i; ++r) append(w, xblock);
        for (unsigned r = 0; r < n - i; ++r) append(w, yblock);
        return w;
    }
    }
    throw std::logic_error("unknown psph generator");
}

unsigned zp_degree(const PsphGenerator& g, const Context& ctx) {
    switch (g.kind) {
    case PsphGenerator::UGen:
    case PsphGenerator::SwapGen:
    case PsphGenerator::XSigma:
    case PsphGenerator::YTau:
        return 0;
    case PsphGenerator::SigmaPower:
        return 1 % ctx.p;
    case PsphGenerator::TauPower:
        return (ctx.p - 1) % ctx.p;
    case PsphGenerator::Mixed:
        return g.k % ctx.p;
    }
    return 0;
}

long word_index_shift(const Word& w) {
    long s = 0;
    for (const auto& g : w) {
        if (g.kind == Generator::Sigma) ++s;
        else if (g.kind == Generator::Tau) --s;
    }
    return s;
}

namespace {

// The product prefactor of a closed form, as a polynomial.
ParamPoly prefactor(const PsphGenerator& g, const Context& ctx) {
    ParamPoly pre = ParamPoly::constant(ctx, ctx.cone());
    const long ell = ctx.ell, q = ctx.q;
    switch (g.kind) {
    case PsphGenerator::XSigma: {
        unsigned upto = ctx.mut.xsigma_drop_factor ? ctx.ell - 1 : ctx.ell;
        for (unsigned m = 0; m < upto; ++m) {
            ParamPoly f = ParamPoly::u(ctx, 1);
            ParamPoly lh = ParamPoly::hbar(ctx);
            lh *= Rational(ell);
            f += lh;
            f -= ctx.s_struct(m);
            pre *= f;
        }
        return pre;
    }
    case PsphGenerator::SigmaPower: {
        for (unsigned i = 1; i <= ctx.n; ++i) {
            for (unsigned m = 0; m < ctx.q; ++m) {
                ParamPoly f = ParamPoly::u(ctx, i);
                ParamPoly lh = ParamPoly::hbar(ctx);
                lh *= Rational(q);
                f += lh;
                f -= ctx.s_struct(m);
                pre *= f;
            }
        }
        return pre;
    }
    case PsphGenerator::Mixed: {
        for (unsigned j = 1; j <= g.i; ++j) {
            for (unsigned m = 0; m < g.k * ctx.q; ++m) {
                ParamPoly f = ParamPoly::u(ctx, j);
                ParamPoly lh = ParamPoly::hbar(ctx);
                lh *= Rational(static_cast<long>(g.k) * q);
                f += lh;
                f -= ctx.s_struct(m);
                pre *= f;
            }
        }
        return pre;
    }
    default:
        return pre;
    }
}

// The substitution map of a closed form (identity for UGen/SwapGen).
std::vector<std::pair<unsigned, ParamPoly>> subst_map(const PsphGenerator& g,
                                                      const Context& ctx) {
    const unsigned n = ctx.n;
    const long ell = ctx.ell, q = ctx.q;
    std::vector<std::pair<unsigned, ParamPoly>> map;
    auto ushift = [&ctx](unsigned i, long mult) {
        ParamPoly f = ParamPoly::u(ctx, i);
        if (mult) {
            ParamPoly s = ParamPoly::hbar(ctx);
            s *= Rational(mult);
            f += s;
        }
        return f;
    };
    switch (g.kind) {
    case PsphGenerator::XSigma:
        // f(U_2, ..., U_n, U_1 + ell hbar)
        for (unsigned i = 1; i < n; ++i) map.emplace_back(i, ushift(i + 1, 0));
        map.emplace_back(n, ushift(1, ell));
        return map;
    case PsphGenerator::YTau:
        // f(U_n - ell hbar, U_1, ..., U_{n-1})
        map.emplace_back(1, ushift(n, -ell));
        for (unsigned i = 2; i <= n; ++i) map.emplace_back(i, ushift(i - 1, 0));
        return map;
    case PsphGenerator::SigmaPower:
        for (unsigned i = 1; i <= n; ++i) map.emplace_back(i, ushift(i, q));
        return map;
    case PsphGenerator::TauPower:
        for (unsigned i = 1; i <= n; ++i) map.emplace_back(i, ushift(i, -q));
        return map;
    case PsphGenerator::Mixed: {
        const long kq = static_cast<long>(g.k) * q;
        for (unsigned a = 1; a <= n - g.i; ++a) map.emplace_back(a, ushift(g.i + a, kq - ell));
        for (unsigned a = n - g.i + 1; a <= n; ++a)
            map.emplace_back(a, ushift(a - (n - g.i), kq));
        return map;
    }
    default:
        return map;
    }
}

} // namespace

RatFunc closed_form_action(const PsphGenerator& g, const RatFunc& f, const Context& ctx) {
    switch (g.kind) {
    case PsphGenerator::UGen:
        return RatFunc(ParamPoly::u(ctx, g.i)) * f;
    case PsphGenerator::SwapGen: {
        RatFunc fsw = f.swap_u(g.i, g.i + 1);
        ParamPoly kl = ParamPoly::kappa(ctx);
        kl *= Rational(ctx.ell);
        RatFunc c(kl, ParamPoly::u(ctx, g.i + 1) - ParamPoly::u(ctx, g.i));
        return fsw + c * (fsw - f);
    }
    default: {
        auto map = subst_map(g, ctx);
        RatFunc out = f.substitute_u(map);
        return RatFunc(prefactor(g, ctx)) * out;
    }
    }
}

ParamPoly closed_form_action(const PsphGenerator& g, const ParamPoly& f, const Context& ctx) {
    RatFunc r = closed_form_action(g, RatFunc(f), ctx);
    if (!r.is_polynomial()) throw std::domain_error("closed form left the polynomial ring");
    // den is the constant 1 after normalization
    return r.num();
}

PolyRepElement embed_upoly(const ParamPoly& f, const Context& ctx) {
    return mul_eprime(PolyRepElement::from_poly(f));
}

bool oracle_compare(const PsphGenerator& g, const ParamPoly& f, const Context& ctx) {
    PolyRepElement lhs = act_word(word_for(g, ctx), embed_upoly(f, ctx));
    lhs = mul_eprime(lhs);
    PolyRepElement rhs = embed_upoly(closed_form_action(g, f, ctx), ctx);
    return lhs == rhs;
}

std::vector<ParamPoly> u_monomials(const Context& ctx, unsigned maxdeg) {
    std::vector<ParamPoly> out;
    std::vector<unsigned> cur(ctx.n, 0);
    while (true) {
        unsigned total = 0;
        for (auto e : cur) total += e;
        if (total <= maxdeg) {
            Monomial m(ctx.num_vars, 0);
            for (unsigned i = 0; i < ctx.n; ++i) m[i] = static_cast<uint16_t>(cur[i]);
            ParamPoly p(&ctx);
            p.add_term(m, ctx.cone());
            out.push_back(std::move(p));
        }
        unsigned i = 0;
        while (i < ctx.n) {
            if (++cur[i] <= maxdeg) break;
            cur[i] = 0;
            ++i;
        }
        if (i == ctx.n) break;
    }
    return out;
}

Report psph_oracle_report(const Context& ctx, unsigned maxdeg) {
    Report rep;
    rep.suite = "psph";
    auto monos = u_monomials(ctx, maxdeg);
    for (const auto& g : all_psph_generators(ctx)) {
        CheckResult res;
        res.id = "psph.oracle." + g.str();
        res.status = CheckStatus::Pass;
        auto start = std::chrono::steady_clock::now();
        for (const auto& f : monos) {
            bool ok = false;
            std::string err;
            try {
                ok = oracle_compare(g, f, ctx);
            } catch (const std::exception& e) {
                err = e.what();
            }
            if (!ok) {
                res.status = CheckStatus::Fail;
                res.counterexample = "f = " + f.str();
                if (!err.empty()) res.counterexample += " (" + err + ")";
                break;
            }
        }
        res.elapsed_ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                             std::chrono::steady_clock::now() - start)
                             .count();
        rep.add(std::move(res));
    }
    return rep;
}

} // namespace chered
