#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "chered/rational.hpp"

namespace chered {

// Per-ell tables for Q(zeta_ell) = Q[x]/Phi_ell(x). Instances are immutable
// and interned process-wide; look them up with CycloField::get(ell).
class CycloField {
public:
    static const CycloField& get(unsigned ell);

    unsigned ell() const { return ell_; }
    unsigned degree() const { return degree_; }
    // Monic cyclotomic polynomial Phi_ell, coefficients low -> high.
    const std::vector<Rational>& phi() const { return phi_; }
    // x^k mod Phi_ell, k reduced mod ell.
    const std::vector<Rational>& zeta_power(long k) const;

private:
    explicit CycloField(unsigned ell);
    unsigned ell_;
    unsigned degree_;
    std::vector<Rational> phi_;
    std::vector<std::vector<Rational>> zeta_pow_;
};

// An element of Q(zeta_ell), stored as a residue mod Phi_ell of degree
// < phi(ell). Equality is coefficient equality of the canonical residue.
class Cyclo {
public:
    Cyclo() : ell_(1), coeff_(1) {}
    explicit Cyclo(unsigned ell) : ell_(ell), coeff_(CycloField::get(ell).degree()) {}
    Cyclo(unsigned ell, const Rational& value);

    static Cyclo zero(unsigned ell) { return Cyclo(ell); }
    static Cyclo one(unsigned ell) { return Cyclo(ell, Rational(1)); }
    // zeta_ell^k (k arbitrary, reduced mod ell)
    static Cyclo zeta(unsigned ell, long k);
    // Construct from an arbitrary-degree polynomial in zeta (low -> high),
    // reducing mod Phi_ell.
    static Cyclo from_poly(unsigned ell, std::vector<Rational> coeffs);

    unsigned ell() const { return ell_; }
    const std::vector<Rational>& coeffs() const { return coeff_; }

    bool is_zero() const;
    bool is_rational() const;
    // The constant coefficient; only meaningful when is_rational().
    const Rational& rational_part() const { return coeff_[0]; }

    Cyclo operator-() const;
    Cyclo& operator+=(const Cyclo& o);
    Cyclo& operator-=(const Cyclo& o);
    friend Cyclo operator+(Cyclo a, const Cyclo& b) { a += b; return a; }
    friend Cyclo operator-(Cyclo a, const Cyclo& b) { a -= b; return a; }
    friend Cyclo operator*(const Cyclo& a, const Cyclo& b);
    Cyclo& operator*=(const Cyclo& o) { *this = *this * o; return *this; }
    Cyclo& operator*=(const Rational& r);
    // Multiplicative inverse; throws std::domain_error on zero.
    Cyclo inverse() const;

    bool operator==(const Cyclo& o) const { return ell_ == o.ell_ && coeff_ == o.coeff_; }
    bool operator!=(const Cyclo& o) const { return !(*this == o); }
    bool operator<(const Cyclo& o) const;

    // Rendered as a polynomial in z = zeta_ell, e.g. "1/2 - 1/2*z".
    std::string str() const;

private:
    unsigned ell_;
    std::vector<Rational> coeff_;
};

} // namespace chered
