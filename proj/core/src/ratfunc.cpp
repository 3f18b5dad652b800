#include "chered/ratfunc.hpp"

#include <stdexcept>

namespace chered {

RatFunc::RatFunc(ParamPoly num) : num_(std::move(num)) {
    if (num_.context()) den_ = ParamPoly::constant(*num_.context(), num_.context()->cone());
    // num-only construction is already canonical
}

RatFunc::RatFunc(ParamPoly num, ParamPoly den) : num_(std::move(num)), den_(std::move(den)) {
    if (den_.is_zero()) throw std::domain_error("rational function with zero denominator");
    normalize();
}

void RatFunc::normalize() {
    const Context& ctx = *den_.context();
    if (num_.is_zero()) {
        den_ = ParamPoly::constant(ctx, ctx.cone());
        return;
    }
    if (!den_.is_constant()) {
        ParamPoly g = poly_gcd(num_, den_);
        if (!g.is_constant()) {
            num_ = exact_divide(num_, g);
            den_ = exact_divide(den_, g);
        }
    }
    Cyclo lc = den_.leading_coeff();
    if (!(lc == ctx.cone())) {
        Cyclo inv = lc.inverse();
        num_ *= inv;
        den_ *= inv;
    }
}

RatFunc RatFunc::operator-() const {
    RatFunc r(*this);
    r.num_ = -r.num_;
    return r;
}

RatFunc operator+(const RatFunc& a, const RatFunc& b) {
    if (a.den_ == b.den_) return RatFunc(a.num_ + b.num_, a.den_);
    return RatFunc(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
}

RatFunc operator-(const RatFunc& a, const RatFunc& b) {
    if (a.den_ == b.den_) return RatFunc(a.num_ - b.num_, a.den_);
    return RatFunc(a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_);
}

RatFunc operator*(const RatFunc& a, const RatFunc& b) {
    return RatFunc(a.num_ * b.num_, a.den_ * b.den_);
}

RatFunc operator/(const RatFunc& a, const RatFunc& b) {
    if (b.is_zero()) throw std::domain_error("division by zero rational function");
    return RatFunc(a.num_ * b.den_, a.den_ * b.num_);
}

RatFunc RatFunc::inverse() const {
    if (is_zero()) throw std::domain_error("inverse of zero rational function");
    return RatFunc(den_, num_);
}

RatFunc RatFunc::substitute_u(const std::vector<std::pair<unsigned, ParamPoly>>& map) const {
    return RatFunc(num_.substitute_u(map), den_.substitute_u(map));
}

RatFunc RatFunc::swap_u(unsigned i, unsigned j) const {
    return RatFunc(num_.swap_u(i, j), den_.swap_u(i, j));
}

RatFunc RatFunc::permute_u(const std::vector<unsigned>& perm) const {
    return RatFunc(num_.permute_u(perm), den_.permute_u(perm));
}

std::string RatFunc::str() const {
    if (is_polynomial()) {
        if (den_.is_zero() || den_ == ParamPoly::constant(*den_.context(), den_.context()->cone()))
            return num_.str();
    }
    return "(" + num_.str() + ") / (" + den_.str() + ")";
}

} // namespace chered
