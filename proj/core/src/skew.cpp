#include "chered/skew.hpp"

#include <sstream>
#include <stdexcept>

namespace chered {

SkewElement SkewElement::one(const Context& ctx) {
    return term(AffineElement::identity(ctx), RatFunc::one(ctx));
}

SkewElement SkewElement::term(const AffineElement& g, const RatFunc& coeff) {
    SkewElement s(g.context());
    s.add_term(g, coeff);
    return s;
}

void SkewElement::add_term(const AffineElement& g, const RatFunc& coeff) {
    if (!ctx_) ctx_ = g.context();
    if (coeff.is_zero()) return;
    auto it = terms_.find(g);
    if (it == terms_.end()) {
        terms_.emplace(g, coeff);
    } else {
        it->second += coeff;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

SkewElement SkewElement::operator-() const {
    SkewElement r(ctx_);
    for (const auto& [g, c] : terms_) r.terms_.emplace(g, -c);
    return r;
}

SkewElement& SkewElement::operator+=(const SkewElement& o) {
    if (!ctx_) ctx_ = o.ctx_;
    for (const auto& [g, c] : o.terms_) add_term(g, c);
    return *this;
}

SkewElement& SkewElement::operator-=(const SkewElement& o) {
    if (!ctx_) ctx_ = o.ctx_;
    for (const auto& [g, c] : o.terms_) add_term(g, -c);
    return *this;
}

SkewElement SkewElement::scaled(const RatFunc& c) const {
    SkewElement r(ctx_);
    if (c.is_zero()) return r;
    for (const auto& [g, v] : terms_) r.add_term(g, v * c);
    return r;
}

std::string SkewElement::str() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [g, c] : terms_) {
        if (!first) os << " + ";
        first = false;
        os << "[" << c.str() << "] * mu(";
        for (size_t i = 0; i < g.shift().size(); ++i) {
            if (i) os << ",";
            os << g.shift()[i];
        }
        os << ")w(";
        for (size_t i = 0; i < g.perm().images().size(); ++i) {
            if (i) os << ",";
            os << g.perm().images()[i];
        }
        os << ")";
    }
    return os.str();
}

SkewElement skew_mul(const SkewElement& x, const SkewElement& y) {
    if (x.context() && y.context() && x.context() != y.context())
        throw std::invalid_argument("skew_mul: mismatched contexts");
    SkewElement r(x.context() ? x.context() : y.context());
    for (const auto& [g1, c1] : x.terms()) {
        for (const auto& [g2, c2] : y.terms()) {
            r.add_term(g1 * g2, c1 * affine_act(g1, c2));
        }
    }
    return r;
}

RatFunc skew_act(const SkewElement& x, const RatFunc& f) {
    const Context& ctx = *x.context();
    RatFunc out = RatFunc::zero(ctx);
    for (const auto& [g, c] : x.terms()) out += c * affine_act(g, f);
    return out;
}

} // namespace chered
