#include "chered/dictionary.hpp"

#include <chrono>
#include <stdexcept>

namespace chered {

namespace {

ParamPoly u_plus_shift_minus_s(const Context& ctx, unsigned i, long mult, unsigned m) {
    ParamPoly f = ParamPoly::u(ctx, i);
    ParamPoly lh = ParamPoly::hbar(ctx);
    lh *= Rational(mult);
    f += lh;
    f -= ctx.s_struct(m);
    return f;
}

ParamPoly xsigma_prefactor(const Context& ctx) {
    ParamPoly pre = ParamPoly::constant(ctx, ctx.cone());
    for (unsigned m = 0; m < ctx.ell; ++m) pre *= u_plus_shift_minus_s(ctx, 1, ctx.ell, m);
    return pre;
}

ParamPoly sigpow_prefactor(const Context& ctx) {
    ParamPoly pre = ParamPoly::constant(ctx, ctx.cone());
    for (unsigned i = 1; i <= ctx.n; ++i)
        for (unsigned m = 0; m < ctx.q; ++m) pre *= u_plus_shift_minus_s(ctx, i, ctx.q, m);
    return pre;
}

ParamPoly mixed_prefactor(const Context& ctx, unsigned i, unsigned k) {
    ParamPoly pre = ParamPoly::constant(ctx, ctx.cone());
    for (unsigned j = 1; j <= i; ++j)
        for (unsigned m = 0; m < k * ctx.q; ++m)
            pre *= u_plus_shift_minus_s(ctx, j, static_cast<long>(k) * ctx.q, m);
    return pre;
}

// s_{1,2} s_{2,3} ... s_{n-1,n} as one permutation (rightmost factor acts
// first on functions).
Perm up_chain(const Context& ctx) {
    Perm w(ctx.n);
    for (unsigned i = 1; i + 1 <= ctx.n; ++i) w = w * Perm::transposition(ctx.n, i, i + 1);
    return w;
}

// s_{n-1,n} s_{n-2,n-1} ... s_{1,2}
Perm down_chain(const Context& ctx) {
    Perm w(ctx.n);
    for (unsigned i = ctx.n; i-- > 1;) w = w * Perm::transposition(ctx.n, i, i + 1);
    return w;
}

// The permutation sending U_1,...,U_n to U_{i+1},...,U_n,U_1,...,U_i:
// U_j -> U_{j+i mod n}.
Perm rotation(const Context& ctx, unsigned i) {
    std::vector<unsigned> img(ctx.n);
    for (unsigned j = 1; j <= ctx.n; ++j) img[j - 1] = ((j - 1 + i) % ctx.n) + 1;
    return Perm(std::move(img));
}

RatFunc kl_over_diff(const Context& ctx, unsigned i) {
    ParamPoly kl = ParamPoly::kappa(ctx);
    kl *= Rational(ctx.ell);
    return RatFunc(kl, ParamPoly::u(ctx, i + 1) - ParamPoly::u(ctx, i));
}

} // namespace

SkewElement to_skew(const PsphGenerator& g, const Context& ctx) {
    const unsigned n = ctx.n;
    const long ell = ctx.ell, q = ctx.q;
    switch (g.kind) {
    case PsphGenerator::UGen:
        return SkewElement::term(AffineElement::identity(ctx),
                                 RatFunc(ParamPoly::u(ctx, g.i)));
    case PsphGenerator::SwapGen: {
        // (1 + k*ell/(U_{i+1}-U_i)) s_{i,i+1} - k*ell/(U_{i+1}-U_i)
        RatFunc c = kl_over_diff(ctx, g.i);
        SkewElement out = SkewElement::term(AffineElement::transposition(ctx, g.i, g.i + 1),
                                            RatFunc::one(ctx) + c);
        if (!ctx.mut.dict_drop_correction)
            out.add_term(AffineElement::identity(ctx), -c);
        return out;
    }
    case PsphGenerator::XSigma: {
        AffineElement a = AffineElement::mu(ctx, 1, ell) *
                          AffineElement(&ctx, std::vector<long>(n, 0), up_chain(ctx));
        return SkewElement::term(a, RatFunc(xsigma_prefactor(ctx)));
    }
    case PsphGenerator::YTau: {
        AffineElement a = AffineElement::mu(ctx, n, -ell) *
                          AffineElement(&ctx, std::vector<long>(n, 0), down_chain(ctx));
        return SkewElement::term(a, RatFunc::one(ctx));
    }
    case PsphGenerator::SigmaPower:
        return SkewElement::term(AffineElement::mu_all(ctx, q),
                                 RatFunc(sigpow_prefactor(ctx)));
    case PsphGenerator::TauPower:
        return SkewElement::term(AffineElement::mu_all(ctx, -q), RatFunc::one(ctx));
    case PsphGenerator::Mixed: {
        AffineElement a = AffineElement::mu_all(ctx, static_cast<long>(g.k) * q);
        for (unsigned j = g.i + 1; j <= n; ++j) a = a * AffineElement::mu(ctx, j, -ell);
        a = a * AffineElement(&ctx, std::vector<long>(n, 0), rotation(ctx, g.i));
        return SkewElement::term(a, RatFunc(mixed_prefactor(ctx, g.i, g.k)));
    }
    }
    throw std::logic_error("unknown psph generator");
}

std::string AffineGenerator::str() const {
    switch (kind) {
    case STrans: return "s" + std::to_string(i) + std::to_string(i + 1);
    case MuPos: return "mu" + std::to_string(i) + "^l";
    case MuNeg: return "mu" + std::to_string(i) + "^-l";
    case MuAllPos: return "muall^l/p";
    case MuAllNeg: return "muall^-l/p";
    }
    return "?";
}

std::vector<AffineGenerator> all_affine_generators(const Context& ctx) {
    std::vector<AffineGenerator> out;
    for (unsigned i = 1; i + 1 <= ctx.n; ++i) out.push_back(AffineGenerator::s(i));
    for (unsigned i = 1; i <= ctx.n; ++i) {
        out.push_back(AffineGenerator::mu_pos(i));
        out.push_back(AffineGenerator::mu_neg(i));
    }
    out.push_back(AffineGenerator::mu_all_pos());
    out.push_back(AffineGenerator::mu_all_neg());
    return out;
}

AffineElement affine_of(const AffineGenerator& g, const Context& ctx) {
    switch (g.kind) {
    case AffineGenerator::STrans: return AffineElement::transposition(ctx, g.i, g.i + 1);
    case AffineGenerator::MuPos: return AffineElement::mu(ctx, g.i, ctx.ell);
    case AffineGenerator::MuNeg: return AffineElement::mu(ctx, g.i, -static_cast<long>(ctx.ell));
    case AffineGenerator::MuAllPos: return AffineElement::mu_all(ctx, ctx.q);
    case AffineGenerator::MuAllNeg: return AffineElement::mu_all(ctx, -static_cast<long>(ctx.q));
    }
    throw std::logic_error("unknown affine generator");
}

RatFunc OperatorExpr::apply(const RatFunc& f, const Context& ctx) const {
    RatFunc out = RatFunc::zero(ctx);
    for (const auto& chain : chains) {
        RatFunc cur = f;
        for (auto it = chain.steps.rbegin(); it != chain.steps.rend(); ++it) {
            if (std::holds_alternative<PermStep>(*it)) {
                const Perm& w = std::get<PermStep>(*it).w;
                cur = cur.permute_u(w.images());
            } else {
                cur = closed_form_action(std::get<PsphStep>(*it).g, cur, ctx);
            }
        }
        out += chain.coeff * cur;
    }
    return out;
}

OperatorExpr from_skew(const AffineGenerator& g, const Context& ctx) {
    const unsigned n = ctx.n;
    OperatorExpr expr;
    switch (g.kind) {
    case AffineGenerator::STrans: {
        // s_{i,i+1} = a * ((i,i+1) + k l/(U_{i+1}-U_i)) with
        // a = (U_{i+1}-U_i)/(U_{i+1}-U_i + k l).
        unsigned i = g.i;
        ParamPoly diff = ParamPoly::u(ctx, i + 1) - ParamPoly::u(ctx, i);
        ParamPoly kl = ParamPoly::kappa(ctx);
        kl *= Rational(ctx.ell);
        RatFunc a(diff, diff + kl);
        RatFunc b = kl_over_diff(ctx, i);
        OperatorExpr::Chain c1{a, {OperatorExpr::PsphStep{PsphGenerator::swap(i)}}};
        OperatorExpr::Chain c2{a * b, {}};
        expr.chains = {std::move(c1), std::move(c2)};
        return expr;
    }
    case AffineGenerator::MuPos: {
        // mu_i^l = (1/prod_m (U_i + l hbar - s_m)) s_{i,...,1} XSigma s_{n,...,i}
        unsigned i = g.i;
        ParamPoly pref = ParamPoly::constant(ctx, ctx.cone());
        for (unsigned m = 0; m < ctx.ell; ++m)
            pref *= u_plus_shift_minus_s(ctx, i, ctx.ell, m);
        Perm left(n), right(n);
        // s_{i,...,1} = s_{i,i-1} ... s_{2,1}; rightmost acts first.
        for (unsigned j = i; j >= 2; --j) left = left * Perm::transposition(n, j - 1, j);
        // s_{n,...,i} = s_{n,n-1} ... s_{i+1,i}
        for (unsigned j = n; j >= i + 1; --j) right = right * Perm::transposition(n, j - 1, j);
        OperatorExpr::Chain c{RatFunc(ParamPoly::constant(ctx, ctx.cone()), pref),
                              {OperatorExpr::PermStep{left},
                               OperatorExpr::PsphStep{PsphGenerator::xsigma()},
                               OperatorExpr::PermStep{right}}};
        expr.chains = {std::move(c)};
        return expr;
    }
    case AffineGenerator::MuNeg: {
        // mu_i^{-l} = s_{i,...,n} YTau s_{1,...,i}
        unsigned i = g.i;
        Perm left(n), right(n);
        // s_{i,...,n} = s_{i,i+1} ... s_{n-1,n}
        for (unsigned j = i; j + 1 <= n; ++j) left = left * Perm::transposition(n, j, j + 1);
        // s_{1,...,i} = s_{1,2} ... s_{i-1,i}
        for (unsigned j = 1; j + 1 <= i; ++j) right = right * Perm::transposition(n, j, j + 1);
        OperatorExpr::Chain c{RatFunc::one(ctx),
                              {OperatorExpr::PermStep{left},
                               OperatorExpr::PsphStep{PsphGenerator::ytau()},
                               OperatorExpr::PermStep{right}}};
        expr.chains = {std::move(c)};
        return expr;
    }
    case AffineGenerator::MuAllPos: {
        OperatorExpr::Chain c{RatFunc(ParamPoly::constant(ctx, ctx.cone()), sigpow_prefactor(ctx)),
                              {OperatorExpr::PsphStep{PsphGenerator::sigma_power()}}};
        expr.chains = {std::move(c)};
        return expr;
    }
    case AffineGenerator::MuAllNeg: {
        OperatorExpr::Chain c{RatFunc::one(ctx),
                              {OperatorExpr::PsphStep{PsphGenerator::tau_power()}}};
        expr.chains = {std::move(c)};
        return expr;
    }
    }
    throw std::logic_error("unknown affine generator");
}

RatFunc random_ratfunc(const Context& ctx, std::mt19937_64& rng) {
    ParamPoly num = random_upoly(ctx, rng, 2);
    if (num.is_zero()) num = ParamPoly::constant(ctx, ctx.cone());
    // denominator: product of up to two linear factors from a fixed pool
    std::uniform_int_distribution<int> nfac(0, 2);
    std::uniform_int_distribution<int> pick(0, 3);
    std::uniform_int_distribution<long> coef(1, 3);
    ParamPoly den = ParamPoly::constant(ctx, ctx.cone());
    int k = nfac(rng);
    for (int t = 0; t < k; ++t) {
        int which = pick(rng);
        std::uniform_int_distribution<unsigned> ui(1, ctx.n);
        unsigned i = ui(rng), j = ui(rng);
        ParamPoly f(&ctx);
        switch (which) {
        case 0:
            f = ParamPoly::u(ctx, i);
            f += ParamPoly::constant(ctx, Rational(coef(rng)));
            break;
        case 1: {
            f = ParamPoly::u(ctx, i);
            ParamPoly h = ParamPoly::hbar(ctx);
            h *= Rational(coef(rng));
            f += h;
            break;
        }
        case 2: {
            if (j == i) j = (i % ctx.n) + 1;
            if (j == i) { // n == 1
                f = ParamPoly::u(ctx, i);
                f += ParamPoly::constant(ctx, Rational(1));
            } else {
                f = ParamPoly::u(ctx, i) - ParamPoly::u(ctx, j);
                f += ParamPoly::hbar(ctx);
            }
            break;
        }
        default: {
            f = ParamPoly::u(ctx, i);
            ParamPoly kp = ParamPoly::kappa(ctx);
            kp *= Rational(coef(rng));
            f += kp;
            break;
        }
        }
        den *= f;
    }
    return RatFunc(num, den);
}

ParamPoly random_upoly(const Context& ctx, std::mt19937_64& rng, unsigned maxdeg) {
    std::uniform_int_distribution<int> nterms(1, 3);
    std::uniform_int_distribution<unsigned> dexp(0, maxdeg);
    std::uniform_int_distribution<long> coef(-3, 3);
    ParamPoly p(&ctx);
    int k = nterms(rng);
    for (int t = 0; t < k; ++t) {
        Monomial m(ctx.num_vars, 0);
        unsigned budget = maxdeg;
        for (unsigned i = 0; i < ctx.n && budget; ++i) {
            unsigned e = dexp(rng) % (budget + 1);
            m[i] = static_cast<uint16_t>(e);
            budget -= e;
        }
        long c = coef(rng);
        if (c == 0) c = 1;
        p.add_term(m, Cyclo(ctx.ell, Rational(c)));
    }
    return p;
}

Report galois_ring_check(const Context& ctx, unsigned samples, uint64_t seed) {
    Report rep;
    rep.suite = "galois";
    std::mt19937_64 rng(seed);
    std::vector<RatFunc> fs;
    fs.reserve(samples);
    for (unsigned s = 0; s < samples; ++s) fs.push_back(random_ratfunc(ctx, rng));

    for (const auto& g : all_psph_generators(ctx)) {
        CheckResult res;
        res.id = "galois.to_skew." + g.str();
        res.status = CheckStatus::Pass;
        auto start = std::chrono::steady_clock::now();
        SkewElement img = to_skew(g, ctx);
        for (const auto& f : fs) {
            RatFunc lhs = skew_act(img, f);
            RatFunc rhs = closed_form_action(g, f, ctx);
            if (lhs != rhs) {
                res.status = CheckStatus::Fail;
                res.counterexample = "f = " + f.str() + ": skew = " + lhs.str() +
                                     ", closed = " + rhs.str();
                break;
            }
        }
        res.elapsed_ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                             std::chrono::steady_clock::now() - start)
                             .count();
        rep.add(std::move(res));
    }
    for (const auto& g : all_affine_generators(ctx)) {
        CheckResult res;
        res.id = "galois.from_skew." + g.str();
        res.status = CheckStatus::Pass;
        auto start = std::chrono::steady_clock::now();
        OperatorExpr expr = from_skew(g, ctx);
        AffineElement a = affine_of(g, ctx);
        for (const auto& f : fs) {
            RatFunc lhs = expr.apply(f, ctx);
            RatFunc rhs = affine_act(a, f);
            if (lhs != rhs) {
                res.status = CheckStatus::Fail;
                res.counterexample = "f = " + f.str() + ": expr = " + lhs.str() +
                                     ", affine = " + rhs.str();
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

Report principality_check(const Context& ctx, unsigned degree_bound) {
    Report rep;
    rep.suite = "principal";
    auto monos = u_monomials(ctx, degree_bound);
    for (const auto& g : all_psph_generators(ctx)) {
        CheckResult res;
        res.id = "principal." + g.str();
        res.status = CheckStatus::Pass;
        auto start = std::chrono::steady_clock::now();
        for (const auto& f : monos) {
            RatFunc out = closed_form_action(g, RatFunc(f), ctx);
            if (!out.is_polynomial()) {
                res.status = CheckStatus::Fail;
                res.counterexample = "f = " + f.str() + ": image = " + out.str();
                break;
            }
        }
        res.elapsed_ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                             std::chrono::steady_clock::now() - start)
                             .count();
        rep.add(std::move(res));
    }

    // Spherical variant: S_n-symmetrized operators on elementary symmetric
    // polynomials; symmetric polynomial in, symmetric polynomial out.
    auto perms = Perm::all(ctx.n);
    std::vector<ParamPoly> elementary;
    for (unsigned k = 1; k <= ctx.n; ++k) {
        // e_k(U) via iterating subsets
        ParamPoly ek(&ctx);
        std::vector<unsigned> idx(k);
        for (unsigned i = 0; i < k; ++i) idx[i] = i + 1;
        while (true) {
            ParamPoly term = ParamPoly::constant(ctx, ctx.cone());
            for (unsigned i : idx) term *= ParamPoly::u(ctx, i);
            ek += term;
            unsigned j = k;
            while (j-- > 0) {
                if (idx[j] < ctx.n - (k - 1 - j)) {
                    ++idx[j];
                    for (unsigned t = j + 1; t < k; ++t) idx[t] = idx[t - 1] + 1;
                    break;
                }
                if (j == 0) { j = static_cast<unsigned>(-1); break; }
            }
            if (j == static_cast<unsigned>(-1)) break;
        }
        elementary.push_back(std::move(ek));
    }
    for (const auto& g : all_psph_generators(ctx)) {
        CheckResult res;
        res.id = "principal.spherical." + g.str();
        res.status = CheckStatus::Pass;
        auto start = std::chrono::steady_clock::now();
        for (const auto& ek : elementary) {
            RatFunc acc = RatFunc::zero(ctx);
            for (const auto& w : perms) {
                RatFunc conj = RatFunc(ek).permute_u(w.inverse().images());
                conj = closed_form_action(g, conj, ctx);
                acc += conj.permute_u(w.images());
            }
            acc = acc * RatFunc(ParamPoly::constant(
                      ctx, Rational(1, static_cast<long>(perms.size()))));
            bool sym = true;
            if (ctx.n > 1) {
                RatFunc sw = acc.swap_u(1, 2);
                sym = (sw == acc);
            }
            if (!acc.is_polynomial() || !sym) {
                res.status = CheckStatus::Fail;
                res.counterexample = "e_k = " + ek.str() + ": image = " + acc.str();
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

Report skew_algebra_check(const Context& ctx, unsigned samples, uint64_t seed) {
    Report rep;
    rep.suite = "skew";
    std::mt19937_64 rng(seed);
    auto gens = all_psph_generators(ctx);
    std::vector<SkewElement> pool;
    pool.reserve(gens.size());
    for (const auto& g : gens) pool.push_back(to_skew(g, ctx));
    std::uniform_int_distribution<size_t> pg(0, pool.size() - 1);

    CheckResult assoc;
    assoc.id = "skew.assoc";
    assoc.status = CheckStatus::Pass;
    auto start = std::chrono::steady_clock::now();
    for (unsigned s = 0; s < samples; ++s) {
        const SkewElement &x = pool[pg(rng)], &y = pool[pg(rng)], &z = pool[pg(rng)];
        SkewElement l = skew_mul(skew_mul(x, y), z);
        SkewElement r = skew_mul(x, skew_mul(y, z));
        if (l != r) {
            assoc.status = CheckStatus::Fail;
            assoc.counterexample = "x = " + x.str() + ", y = " + y.str() + ", z = " + z.str();
            break;
        }
    }
    assoc.elapsed_ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                           std::chrono::steady_clock::now() - start)
                           .count();
    rep.add(std::move(assoc));

    CheckResult action;
    action.id = "skew.action";
    action.status = CheckStatus::Pass;
    start = std::chrono::steady_clock::now();
    for (unsigned s = 0; s < samples; ++s) {
        const SkewElement &x = pool[pg(rng)], &y = pool[pg(rng)];
        RatFunc f = random_ratfunc(ctx, rng);
        RatFunc l = skew_act(skew_mul(x, y), f);
        RatFunc r = skew_act(x, skew_act(y, f));
        if (l != r) {
            action.status = CheckStatus::Fail;
            action.counterexample = "x = " + x.str() + ", y = " + y.str() + ", f = " + f.str();
            break;
        }
    }
    action.elapsed_ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                            std::chrono::steady_clock::now() - start)
                            .count();
    rep.add(std::move(action));
    return rep;
}

Report zp_degree_check(const Context& ctx) {
    Report rep;
    rep.suite = "zp_degree";
    const long ell = ctx.ell;
    const long nlq = static_cast<long>(ctx.n) * ctx.q;
    for (const auto& g : all_psph_generators(ctx)) {
        CheckResult res;
        res.id = "zp." + g.str();
        res.status = CheckStatus::Pass;
        long deg = static_cast<long>(zp_degree(g, ctx));
        // lattice part: total shift == deg * (n ell / p) mod ell on every term
        SkewElement img = to_skew(g, ctx);
        for (const auto& [a, c] : img.terms()) {
            long total = a.total_shift();
            if (((total - deg * nlq) % ell + ell) % ell != 0) {
                res.status = CheckStatus::Fail;
                res.counterexample = "lattice shift " + std::to_string(total);
            }
        }
        // word side: net sigma/tau shift gives the same winding
        long s = word_index_shift(word_for(g, ctx));
        if (((s - deg * nlq) % ell + ell) % ell != 0) {
            res.status = CheckStatus::Fail;
            res.counterexample += " word shift " + std::to_string(s);
        }
        rep.add(std::move(res));
    }
    // additivity on pairwise products of generator words
    auto gens = all_psph_generators(ctx);
    CheckResult add;
    add.id = "zp.additive";
    add.status = CheckStatus::Pass;
    for (const auto& g1 : gens) {
        for (const auto& g2 : gens) {
            long d1 = zp_degree(g1, ctx), d2 = zp_degree(g2, ctx);
            Word w = word_for(g1, ctx);
            Word w2 = word_for(g2, ctx);
            w.insert(w.end(), w2.begin(), w2.end());
            long s = word_index_shift(w);
            if (((s - (d1 + d2) * nlq) % ell + ell) % ell != 0) {
                add.status = CheckStatus::Fail;
                add.counterexample = g1.str() + " * " + g2.str();
            }
        }
    }
    rep.add(std::move(add));
    return rep;
}

} // namespace chered
