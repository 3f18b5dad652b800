#pragma once

#include <map>
#include <string>

#include "chered/affine.hpp"

namespace chered {

// Element of the skew monoid ring C(U) * (T x| S_n): a finite sum of
// coefficient-times-automorphism terms, keyed by the automorphism, with
// multiplication (a1 mu1)(a2 mu2) = (a1 mu1(a2)) mu1 mu2.
class SkewElement {
public:
    SkewElement() : ctx_(nullptr) {}
    explicit SkewElement(const Context* ctx) : ctx_(ctx) {}

    static SkewElement zero(const Context& ctx) { return SkewElement(&ctx); }
    static SkewElement one(const Context& ctx);
    static SkewElement term(const AffineElement& g, const RatFunc& coeff);

    const Context* context() const { return ctx_; }
    const std::map<AffineElement, RatFunc>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    size_t term_count() const { return terms_.size(); }

    void add_term(const AffineElement& g, const RatFunc& coeff);

    SkewElement operator-() const;
    SkewElement& operator+=(const SkewElement& o);
    SkewElement& operator-=(const SkewElement& o);
    friend SkewElement operator+(SkewElement a, const SkewElement& b) { a += b; return a; }
    friend SkewElement operator-(SkewElement a, const SkewElement& b) { a -= b; return a; }
    SkewElement scaled(const RatFunc& c) const;

    bool operator==(const SkewElement& o) const { return terms_ == o.terms_; }
    bool operator!=(const SkewElement& o) const { return !(*this == o); }

    std::string str() const;

private:
    const Context* ctx_;
    std::map<AffineElement, RatFunc> terms_;
};

SkewElement skew_mul(const SkewElement& x, const SkewElement& y);
RatFunc skew_act(const SkewElement& x, const RatFunc& f);

} // namespace chered
