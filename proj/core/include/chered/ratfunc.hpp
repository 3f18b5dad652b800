#pragma once

#include <string>

#include "chered/parampoly.hpp"

namespace chered {

// Rational function num/den in the context's variables, kept in canonical
// form: gcd(num, den) = 1 and den monic under graded lex. Two equal fractions
// therefore have identical stored representations.
class RatFunc {
public:
    RatFunc() = default;
    explicit RatFunc(ParamPoly num);
    RatFunc(ParamPoly num, ParamPoly den);

    static RatFunc zero(const Context& ctx) { return RatFunc(ParamPoly::zero(ctx)); }
    static RatFunc one(const Context& ctx) {
        return RatFunc(ParamPoly::constant(ctx, ctx.cone()));
    }

    const ParamPoly& num() const { return num_; }
    const ParamPoly& den() const { return den_; }
    const Context* context() const { return num_.context(); }

    bool is_zero() const { return num_.is_zero(); }
    bool is_polynomial() const { return den_.is_constant(); }

    RatFunc operator-() const;
    friend RatFunc operator+(const RatFunc& a, const RatFunc& b);
    friend RatFunc operator-(const RatFunc& a, const RatFunc& b);
    friend RatFunc operator*(const RatFunc& a, const RatFunc& b);
    friend RatFunc operator/(const RatFunc& a, const RatFunc& b);
    RatFunc& operator+=(const RatFunc& o) { *this = *this + o; return *this; }
    RatFunc& operator-=(const RatFunc& o) { *this = *this - o; return *this; }
    RatFunc& operator*=(const RatFunc& o) { *this = *this * o; return *this; }
    RatFunc& operator/=(const RatFunc& o) { *this = *this / o; return *this; }

    RatFunc inverse() const;

    bool operator==(const RatFunc& o) const { return num_ == o.num_ && den_ == o.den_; }
    bool operator!=(const RatFunc& o) const { return !(*this == o); }

    // Substitution / permutation of U variables applied to both num and den.
    RatFunc substitute_u(const std::vector<std::pair<unsigned, ParamPoly>>& map) const;
    RatFunc swap_u(unsigned i, unsigned j) const;
    RatFunc permute_u(const std::vector<unsigned>& perm) const;

    std::string str() const;

private:
    void normalize();
    ParamPoly num_;
    ParamPoly den_;
};

} // namespace chered
