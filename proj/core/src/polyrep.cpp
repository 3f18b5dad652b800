#include "chered/polyrep.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace chered {

PolyRepElement PolyRepElement::from_poly(const ParamPoly& p) {
    PolyRepElement f(p.context());
    if (!p.is_zero()) f.terms_.emplace(TExp(p.context()->n, 0), p);
    return f;
}

PolyRepElement PolyRepElement::monomial(const Context& ctx, const std::vector<unsigned>& uexp,
                                        const TExp& texp) {
    Monomial m(ctx.num_vars, 0);
    for (unsigned i = 0; i < ctx.n; ++i) m[i] = static_cast<uint16_t>(uexp[i]);
    ParamPoly p(&ctx);
    p.add_term(m, ctx.cone());
    PolyRepElement f(&ctx);
    TExp t = texp;
    for (auto& e : t) e = static_cast<uint16_t>(e % ctx.ell);
    f.terms_.emplace(std::move(t), std::move(p));
    return f;
}

bool PolyRepElement::in_subring() const {
    for (const auto& [t, c] : terms_) {
        unsigned total = 0;
        for (auto e : t) total += e;
        if (total % ctx_->p != 0) return false;
    }
    return true;
}

bool PolyRepElement::is_t_free() const {
    if (terms_.empty()) return true;
    return terms_.size() == 1 && terms_.begin()->first == TExp(ctx_->n, 0);
}

ParamPoly PolyRepElement::t_free_part() const {
    auto it = terms_.find(TExp(ctx_->n, 0));
    if (it == terms_.end()) return ParamPoly::zero(*ctx_);
    return it->second;
}

void PolyRepElement::add_term(const TExp& t, const ParamPoly& c) {
    if (c.is_zero()) return;
    auto it = terms_.find(t);
    if (it == terms_.end()) {
        terms_.emplace(t, c);
    } else {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

PolyRepElement PolyRepElement::operator-() const {
    PolyRepElement r(*this);
    for (auto& [t, c] : r.terms_) c = -c;
    return r;
}

PolyRepElement& PolyRepElement::operator+=(const PolyRepElement& o) {
    if (!ctx_) ctx_ = o.ctx_;
    for (const auto& [t, c] : o.terms_) add_term(t, c);
    return *this;
}

PolyRepElement& PolyRepElement::operator-=(const PolyRepElement& o) {
    if (!ctx_) ctx_ = o.ctx_;
    for (const auto& [t, c] : o.terms_) add_term(t, -c);
    return *this;
}

PolyRepElement PolyRepElement::scaled(const ParamPoly& c) const {
    PolyRepElement r(ctx_);
    if (c.is_zero()) return r;
    for (const auto& [t, v] : terms_) r.terms_.emplace(t, v * c);
    return r;
}

PolyRepElement PolyRepElement::scaled(const Cyclo& c) const {
    PolyRepElement r(ctx_);
    if (c.is_zero()) return r;
    for (const auto& [t, v] : terms_) {
        ParamPoly vc = v;
        vc *= c;
        r.terms_.emplace(t, std::move(vc));
    }
    return r;
}

PolyRepElement PolyRepElement::scaled(const Rational& c) const {
    PolyRepElement r(ctx_);
    if (c == 0) return r;
    for (const auto& [t, v] : terms_) {
        ParamPoly vc = v;
        vc *= c;
        r.terms_.emplace(t, std::move(vc));
    }
    return r;
}

std::string PolyRepElement::str() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [t, c] : terms_) {
        if (!first) os << " + ";
        first = false;
        std::string tv;
        for (unsigned i = 0; i < t.size(); ++i) {
            if (!t[i]) continue;
            if (!tv.empty()) tv += "*";
            tv += "T" + std::to_string(i + 1);
            if (t[i] > 1) tv += "^" + std::to_string(t[i]);
        }
        if (tv.empty()) {
            os << "(" << c.str() << ")";
        } else {
            os << "(" << c.str() << ")*" << tv;
        }
    }
    return os.str();
}

std::string Generator::str() const {
    switch (kind) {
    case U: return "u" + std::to_string(index);
    case T: return "t" + std::to_string(index);
    case Swap: return "s" + std::to_string(index);
    case Sigma: return "sig";
    case Tau: return "tau";
    }
    return "?";
}

std::string word_str(const Word& w) {
    if (w.empty()) return "1";
    std::string s;
    for (const auto& g : w) {
        if (!s.empty()) s += "*";
        s += g.str();
    }
    return s;
}

PolyRepElement act_tmono(const TExp& t, const PolyRepElement& f) {
    const Context& ctx = *f.context();
    PolyRepElement r(&ctx);
    for (const auto& [m, c] : f.terms()) {
        TExp mm(m.size());
        for (size_t i = 0; i < m.size(); ++i)
            mm[i] = static_cast<uint16_t>((m[i] + t[i]) % ctx.ell);
        r.add_term(mm, c);
    }
    return r;
}

PolyRepElement subst_t(const TExp& a, const PolyRepElement& f) {
    const Context& ctx = *f.context();
    PolyRepElement r(&ctx);
    for (const auto& [m, c] : f.terms()) {
        long z = 0;
        for (size_t i = 0; i < m.size(); ++i) z += static_cast<long>(a[i]) * m[i];
        ParamPoly cc = c;
        cc *= ctx.zeta(z);
        r.add_term(m, cc);
    }
    return r;
}

PolyRepElement linear_act(const GPNElement& g, const PolyRepElement& f) {
    const Context& ctx = *f.context();
    const Perm& w = g.perm();
    PolyRepElement out(&ctx);
    for (const auto& [m, c] : f.terms()) {
        TExp mm(m.size());
        for (unsigned j = 1; j <= ctx.n; ++j) mm[w(j) - 1] = m[j - 1];
        std::vector<unsigned> img = w.images();
        out.add_term(mm, c.permute_u(img));
    }
    return subst_t(g.texp(), out);
}

PolyRepElement pi_mult(unsigned i, const PolyRepElement& f) {
    const Context& ctx = *f.context();
    PolyRepElement out(&ctx);
    for (unsigned k = 0; k < ctx.ell; ++k) {
        TExp t(ctx.n, 0);
        t[i - 1] = static_cast<uint16_t>(k);
        t[i] = static_cast<uint16_t>((ctx.ell - k) % ctx.ell);
        out += act_tmono(t, f);
    }
    return out.scaled(Rational(1, ctx.ell));
}

PolyRepElement p_of_t_mult(unsigned i, long a, const PolyRepElement& f) {
    const Context& ctx = *f.context();
    const auto& ck = ctx.c_coeffs();
    PolyRepElement out(&ctx);
    for (unsigned k = 0; k < ctx.ell; ++k) {
        if (ck[k].is_zero()) continue;
        TExp t(ctx.n, 0);
        t[i - 1] = static_cast<uint16_t>(k);
        ParamPoly coeff = ck[k];
        coeff *= ctx.zeta(a * static_cast<long>(k));
        out += act_tmono(t, f).scaled(coeff);
    }
    return out;
}

namespace {

PolyRepElement act_u(unsigned i, const PolyRepElement& f) {
    const Context& ctx = *f.context();
    if (i < 1 || i > ctx.n) throw std::out_of_range("u index");
    return f.scaled(ParamPoly::u(ctx, i));
}

PolyRepElement act_t(unsigned i, const PolyRepElement& f) {
    const Context& ctx = *f.context();
    if (i < 1 || i > ctx.n) throw std::out_of_range("t index");
    TExp t(ctx.n, 0);
    t[i - 1] = 1;
    return act_tmono(t, f);
}

// (i,i+1): f^sw + kappa*ell * [(f^sw - f) pi_{i,i+1}] / (U_{i+1} - U_i).
// The divided difference is taken after spreading by pi: grouping the
// T-monomials into classes under adding multiples of e_i - e_{i+1}, the class
// sums of (f^sw - f) are antisymmetric under the U swap, hence exactly
// divisible.
PolyRepElement act_swap(unsigned i, const PolyRepElement& f) {
    const Context& ctx = *f.context();
    if (i < 1 || i + 1 > ctx.n) throw std::out_of_range("swap index");
    const unsigned ell = ctx.ell;
    PolyRepElement fsw(&ctx);
    for (const auto& [t, c] : f.terms()) {
        TExp tt = t;
        std::swap(tt[i - 1], tt[i]);
        fsw.add_term(tt, c.swap_u(i, i + 1));
    }
    ParamPoly den = ParamPoly::u(ctx, i + 1) - ParamPoly::u(ctx, i);
    ParamPoly kl = ParamPoly::kappa(ctx);
    kl *= Rational(ell);
    PolyRepElement diff = fsw - f;
    if (ctx.mut.swap_drop_pi) {
        // mutated rule: per-monomial divided difference, no pi
        PolyRepElement corr(&ctx);
        for (const auto& [t, c] : diff.terms()) corr.add_term(t, exact_divide(c, den));
        return fsw + corr.scaled(kl);
    }
    // class sums
    std::map<TExp, ParamPoly> classes;
    for (const auto& [t, c] : diff.terms()) {
        TExp rep = t;
        uint16_t k = rep[i - 1];
        rep[i - 1] = 0;
        rep[i] = static_cast<uint16_t>((rep[i] + k) % ell);
        auto it = classes.find(rep);
        if (it == classes.end()) classes.emplace(std::move(rep), c);
        else it->second += c;
    }
    PolyRepElement out = fsw;
    ParamPoly kappa = ParamPoly::kappa(ctx);
    for (const auto& [rep, sum] : classes) {
        if (sum.is_zero()) continue;
        ParamPoly d = exact_divide(sum, den);
        d *= kappa;
        // kappa*ell * (1/ell) = kappa on each of the ell class members
        for (unsigned k = 0; k < ell; ++k) {
            TExp t = rep;
            t[i - 1] = static_cast<uint16_t>((t[i - 1] + k) % ell);
            t[i] = static_cast<uint16_t>((t[i] + ell - k) % ell);
            out.add_term(t, d);
        }
    }
    return out;
}

// sigma: multiply by (U_1 + hbar - p(zeta^{-1} T_1)) after the substitution
//   U_i -> U_{i+1} (i<n), U_n -> U_1 + hbar;
//   T_i -> T_{i+1} (i<n), T_n -> zeta^{-1} T_1.
PolyRepElement act_sigma(const PolyRepElement& f) {
    const Context& ctx = *f.context();
    const unsigned n = ctx.n;
    std::vector<std::pair<unsigned, ParamPoly>> umap;
    ParamPoly u1h = ParamPoly::u(ctx, 1) + ParamPoly::hbar(ctx);
    if (n == 1) {
        umap.emplace_back(1, u1h);
    } else {
        for (unsigned i = 1; i < n; ++i) umap.emplace_back(i, ParamPoly::u(ctx, i + 1));
        umap.emplace_back(n, u1h);
    }
    PolyRepElement g(&ctx);
    for (const auto& [t, c] : f.terms()) {
        TExp tt(n);
        for (unsigned i = 0; i + 1 < n; ++i) tt[i + 1] = t[i];
        tt[0] = t[n - 1];
        ParamPoly cc = c.substitute_u(umap);
        cc *= ctx.zeta(-static_cast<long>(t[n - 1]));
        g.add_term(tt, cc);
    }
    ParamPoly mult = ParamPoly::u(ctx, 1);
    if (!ctx.mut.sigma_drop_hbar) mult += ParamPoly::hbar(ctx);
    return g.scaled(mult) - p_of_t_mult(1, -1, g);
}

// tau: the substitution
//   U_i -> U_{i-1} (i>1), U_1 -> U_n - hbar;
//   T_i -> T_{i-1} (i>1), T_1 -> zeta T_n.
PolyRepElement act_tau(const PolyRepElement& f) {
    const Context& ctx = *f.context();
    const unsigned n = ctx.n;
    std::vector<std::pair<unsigned, ParamPoly>> umap;
    ParamPoly unh = ParamPoly::u(ctx, n);
    ParamPoly hb = ParamPoly::hbar(ctx);
    if (ctx.mut.tau_flip_shift) unh += hb;
    else unh -= hb;
    if (n == 1) {
        umap.emplace_back(1, unh);
    } else {
        umap.emplace_back(1, unh);
        for (unsigned i = 2; i <= n; ++i) umap.emplace_back(i, ParamPoly::u(ctx, i - 1));
    }
    PolyRepElement g(&ctx);
    for (const auto& [t, c] : f.terms()) {
        TExp tt(n);
        for (unsigned i = 1; i < n; ++i) tt[i - 1] = t[i];
        tt[n - 1] = t[0];
        ParamPoly cc = c.substitute_u(umap);
        cc *= ctx.zeta(static_cast<long>(t[0]));
        g.add_term(tt, cc);
    }
    return g;
}

} // namespace

PolyRepElement act_gen(const Generator& g, const PolyRepElement& f) {
    switch (g.kind) {
    case Generator::U: return act_u(g.index, f);
    case Generator::T: return act_t(g.index, f);
    case Generator::Swap: return act_swap(g.index, f);
    case Generator::Sigma: return act_sigma(f);
    case Generator::Tau: return act_tau(f);
    }
    throw std::logic_error("unknown generator");
}

PolyRepElement act_word(const Word& w, const PolyRepElement& f) {
    PolyRepElement cur = f;
    for (auto it = w.rbegin(); it != w.rend(); ++it) cur = act_gen(*it, cur);
    return cur;
}

Word standard_gen_word(StandardKind kind, unsigned i, const Context& ctx) {
    const unsigned n = ctx.n;
    if (i < 1 || i > n) throw std::out_of_range("standard generator index");
    Word w;
    if (kind == StandardKind::X) {
        // (i,...,1) = Swap(i-1) Swap(i-2) ... Swap(1)
        for (unsigned j = i; j >= 2; --j) w.push_back(Generator::swap(j - 1));
        w.push_back(Generator::sigma());
        // (n,...,i) = Swap(n-1) ... Swap(i)
        for (unsigned j = n; j >= i + 1; --j) w.push_back(Generator::swap(j - 1));
    } else {
        // (i,...,n) = Swap(i) Swap(i+1) ... Swap(n-1)
        for (unsigned j = i; j < n; ++j) w.push_back(Generator::swap(j));
        w.push_back(Generator::tau());
        // (1,...,i) = Swap(1) ... Swap(i-1)
        for (unsigned j = 1; j < i; ++j) w.push_back(Generator::swap(j));
    }
    return w;
}

PolyRepElement eprime_element(const Context& ctx) {
    auto diag = enumerate_diagonal(ctx);
    PolyRepElement out(&ctx);
    ParamPoly coeff = ParamPoly::constant(ctx, Rational(1, static_cast<long>(diag.size())));
    for (const auto& a : diag) out.add_term(a, coeff);
    return out;
}

PolyRepElement mul_eprime(const PolyRepElement& f) {
    const Context& ctx = *f.context();
    auto diag = enumerate_diagonal(ctx);
    PolyRepElement out(&ctx);
    for (const auto& a : diag) out += act_tmono(a, f);
    return out.scaled(Rational(1, static_cast<long>(diag.size())));
}

PolyRepElement project_e_prime(const PolyRepElement& f) {
    const Context& ctx = *f.context();
    // Survivors: texp = m * (ell/p) * (1,...,1).
    PolyRepElement out(&ctx);
    for (const auto& [t, c] : f.terms()) {
        bool keep = true;
        for (auto e : t) {
            if (e != t[0]) { keep = false; break; }
        }
        if (keep && t[0] % ctx.q != 0) keep = false;
        if (keep) out.add_term(t, c);
    }
    return out;
}

PolyRepElement project_e_prime_brute(const PolyRepElement& f) {
    const Context& ctx = *f.context();
    auto diag = enumerate_diagonal(ctx);
    PolyRepElement out(&ctx);
    for (const auto& a : diag) out += subst_t(a, f);
    return out.scaled(Rational(1, static_cast<long>(diag.size())));
}

Word perm_word(const Perm& w) {
    // Sort the image list with adjacent swaps; each exchange applied to the
    // one-line form corresponds to one Swap generator, collected so that the
    // resulting word reproduces the permutation's linear action.
    std::vector<unsigned> arr = w.images();
    Word word;
    bool changed = true;
    while (changed) {
        changed = false;
        for (unsigned i = 0; i + 1 < arr.size(); ++i) {
            if (arr[i] > arr[i + 1]) {
                std::swap(arr[i], arr[i + 1]);
                word.push_back(Generator::swap(i + 1));
                changed = true;
            }
        }
    }
    std::reverse(word.begin(), word.end());
    return word;
}

PolyRepElement project_e(const PolyRepElement& f) {
    const Context& ctx = *f.context();
    auto diag = enumerate_diagonal(ctx);
    auto perms = Perm::all(ctx.n);
    std::vector<std::pair<Perm, Word>> words;
    words.reserve(perms.size());
    for (const auto& w : perms) words.emplace_back(w, perm_word(w));
    PolyRepElement out(&ctx);
    for (const auto& [w, word] : words) {
        PolyRepElement g = act_word(word, f);
        for (const auto& a : diag) out += subst_t(a, g);
    }
    return out.scaled(Rational(1, static_cast<long>(diag.size() * perms.size())));
}

} // namespace chered
