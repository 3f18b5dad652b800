#include "chered/parampoly.hpp"

#include <sstream>

namespace chered {

ParamPoly ParamPoly::constant(const Context& ctx, const Cyclo& c) {
    ParamPoly p(&ctx);
    if (!c.is_zero()) p.terms_.emplace(Monomial(ctx.num_vars, 0), c);
    return p;
}

ParamPoly ParamPoly::constant(const Context& ctx, const Rational& r) {
    return constant(ctx, Cyclo(ctx.ell, r));
}

ParamPoly ParamPoly::variable(const Context& ctx, unsigned var_index, unsigned power) {
    ParamPoly p(&ctx);
    if (power == 0) return constant(ctx, ctx.cone());
    Monomial m(ctx.num_vars, 0);
    m[var_index] = static_cast<uint16_t>(power);
    p.terms_.emplace(std::move(m), ctx.cone());
    return p;
}

bool ParamPoly::is_constant() const {
    if (terms_.empty()) return true;
    return terms_.size() == 1 && total_degree(terms_.begin()->first) == 0;
}

unsigned ParamPoly::degree() const {
    if (terms_.empty()) return 0;
    return total_degree(terms_.rbegin()->first);
}

const Monomial& ParamPoly::leading_monomial() const {
    return terms_.rbegin()->first;
}

const Cyclo& ParamPoly::leading_coeff() const {
    return terms_.rbegin()->second;
}

void ParamPoly::add_term(const Monomial& m, const Cyclo& c) {
    if (c.is_zero()) return;
    auto it = terms_.find(m);
    if (it == terms_.end()) {
        terms_.emplace(m, c);
    } else {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

ParamPoly ParamPoly::operator-() const {
    ParamPoly r(*this);
    for (auto& [m, c] : r.terms_) c = -c;
    return r;
}

ParamPoly& ParamPoly::operator+=(const ParamPoly& o) {
    if (!ctx_) ctx_ = o.ctx_;
    for (const auto& [m, c] : o.terms_) add_term(m, c);
    return *this;
}

ParamPoly& ParamPoly::operator-=(const ParamPoly& o) {
    if (!ctx_) ctx_ = o.ctx_;
    for (const auto& [m, c] : o.terms_) add_term(m, -c);
    return *this;
}

ParamPoly operator*(const ParamPoly& a, const ParamPoly& b) {
    ParamPoly r(a.ctx_ ? a.ctx_ : b.ctx_);
    if (a.terms_.empty() || b.terms_.empty()) return r;
    Monomial m(a.terms_.begin()->first.size());
    for (const auto& [ma, ca] : a.terms_) {
        for (const auto& [mb, cb] : b.terms_) {
            for (size_t i = 0; i < m.size(); ++i) m[i] = static_cast<uint16_t>(ma[i] + mb[i]);
            r.add_term(m, ca * cb);
        }
    }
    return r;
}

ParamPoly& ParamPoly::operator*=(const Cyclo& c) {
    if (c.is_zero()) {
        terms_.clear();
        return *this;
    }
    for (auto& [m, v] : terms_) v *= c;
    return *this;
}

ParamPoly& ParamPoly::operator*=(const Rational& r) {
    if (r == 0) {
        terms_.clear();
        return *this;
    }
    for (auto& [m, v] : terms_) v *= r;
    return *this;
}

ParamPoly ParamPoly::substitute_u(const std::vector<std::pair<unsigned, ParamPoly>>& map) const {
    const Context& ctx = *ctx_;
    ParamPoly out(ctx_);
    for (const auto& [m, c] : terms_) {
        // Split the monomial into substituted U part and the untouched rest.
        Monomial rest = m;
        ParamPoly term = ParamPoly::constant(ctx, c);
        bool touched = false;
        for (const auto& [ui, rep] : map) {
            unsigned idx = ctx.u_index(ui);
            for (uint16_t e = 0; e < m[idx]; ++e) term = term * rep;
            if (m[idx]) touched = true;
            rest[idx] = 0;
        }
        if (touched) {
            ParamPoly restp(ctx_);
            restp.terms_.emplace(std::move(rest), ctx.cone());
            term = term * restp;
        } else {
            ParamPoly restp(ctx_);
            restp.terms_.emplace(m, c);
            term = std::move(restp);
        }
        out += term;
    }
    return out;
}

ParamPoly ParamPoly::swap_u(unsigned i, unsigned j) const {
    const Context& ctx = *ctx_;
    ParamPoly out(ctx_);
    unsigned a = ctx.u_index(i), b = ctx.u_index(j);
    for (const auto& [m, c] : terms_) {
        Monomial mm = m;
        std::swap(mm[a], mm[b]);
        out.terms_.emplace(std::move(mm), c);
    }
    return out;
}

ParamPoly ParamPoly::permute_u(const std::vector<unsigned>& perm) const {
    const Context& ctx = *ctx_;
    ParamPoly out(ctx_);
    for (const auto& [m, c] : terms_) {
        Monomial mm = m;
        for (unsigned j = 1; j <= ctx.n; ++j) mm[ctx.u_index(perm[j - 1])] = m[ctx.u_index(j)];
        out.add_term(mm, c);
    }
    return out;
}

bool ParamPoly::depends_on_u() const {
    for (const auto& [m, c] : terms_) {
        for (unsigned i = 0; i < ctx_->n; ++i)
            if (m[i]) return true;
    }
    return false;
}

bool ParamPoly::depends_on_var(unsigned var_index) const {
    for (const auto& [m, c] : terms_)
        if (m[var_index]) return true;
    return false;
}

void ParamPoly::divide_qr(const ParamPoly& f, const ParamPoly& g, ParamPoly& quo, ParamPoly& rem) {
    if (g.is_zero()) throw std::domain_error("division by zero polynomial");
    quo = ParamPoly(f.ctx_);
    rem = ParamPoly(f.ctx_);
    ParamPoly work = f;
    const Monomial& glead = g.leading_monomial();
    Cyclo glc_inv = g.leading_coeff().inverse();
    Monomial diff(glead.size());
    while (!work.is_zero()) {
        const Monomial& flead = work.leading_monomial();
        bool divisible = true;
        for (size_t i = 0; i < diff.size(); ++i) {
            if (flead[i] < glead[i]) { divisible = false; break; }
            diff[i] = static_cast<uint16_t>(flead[i] - glead[i]);
        }
        if (!divisible) {
            rem.add_term(flead, work.leading_coeff());
            ParamPoly t(f.ctx_);
            t.terms_.emplace(flead, work.leading_coeff());
            work -= t;
            continue;
        }
        Cyclo qc = work.leading_coeff() * glc_inv;
        ParamPoly qt(f.ctx_);
        qt.terms_.emplace(diff, qc);
        quo += qt;
        work -= qt * g;
    }
}

ParamPoly exact_divide(const ParamPoly& f, const ParamPoly& g) {
    ParamPoly q, r;
    ParamPoly::divide_qr(f, g, q, r);
    if (!r.is_zero()) throw NonDivisible("exact_divide: nonzero remainder");
    return q;
}

std::string ParamPoly::str() const {
    if (terms_.empty()) return "0";
    const Context& ctx = *ctx_;
    std::ostringstream os;
    bool first = true;
    // Print leading term first.
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
        const auto& [m, c] = *it;
        std::string cs = c.str();
        bool negated = false;
        if (c.is_rational() && c.rational_part() < 0) {
            negated = true;
            Cyclo pos = -c;
            cs = pos.str();
        }
        if (first) {
            if (negated) os << "-";
        } else {
            os << (negated ? " - " : " + ");
        }
        first = false;
        std::string vars;
        for (size_t i = 0; i < m.size(); ++i) {
            if (!m[i]) continue;
            if (!vars.empty()) vars += "*";
            vars += ctx.var_name(static_cast<unsigned>(i));
            if (m[i] > 1) vars += "^" + std::to_string(m[i]);
        }
        bool unit_coeff = (cs == "1");
        bool simple_coeff = c.is_rational() || c == Cyclo::zeta(ctx.ell, 1);
        if (vars.empty()) {
            os << (c.is_rational() || simple_coeff ? cs : "(" + cs + ")");
        } else if (unit_coeff) {
            os << vars;
        } else if (simple_coeff) {
            os << cs << "*" << vars;
        } else {
            os << "(" << cs << ")*" << vars;
        }
    }
    return os.str();
}

} // namespace chered
