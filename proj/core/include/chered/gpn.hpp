#pragma once

#include <cstdint>
#include <vector>

#include "chered/context.hpp"

namespace chered {

// Permutation of {1..n}, stored as 0-based images: image(i) = img_[i-1].
class Perm {
public:
    Perm() = default;
    explicit Perm(unsigned n);                      // identity
    explicit Perm(std::vector<unsigned> images);    // 1-based images
    static Perm transposition(unsigned n, unsigned i, unsigned j);

    unsigned size() const { return static_cast<unsigned>(img_.size()); }
    unsigned operator()(unsigned i) const { return img_[i - 1]; } // 1-based
    const std::vector<unsigned>& images() const { return img_; }

    Perm inverse() const;
    // Composition: (a*b)(i) = a(b(i)); b acts first.
    friend Perm operator*(const Perm& a, const Perm& b);
    bool is_identity() const;
    bool operator==(const Perm& o) const { return img_ == o.img_; }
    bool operator<(const Perm& o) const { return img_ < o.img_; }

    static std::vector<Perm> all(unsigned n);

private:
    std::vector<unsigned> img_; // 1-based images at 0-based positions
};

// Element t^a * w of G(ell,1,n), with the G(ell,p,n) membership predicate
// sum(a) = 0 mod p. texp entries live in Z/ell.
class GPNElement {
public:
    GPNElement() = default;
    GPNElement(const Context* ctx, std::vector<uint16_t> texp, Perm perm);
    static GPNElement identity(const Context& ctx);
    static GPNElement diagonal(const Context& ctx, unsigned i, long k); // t_i^k
    static GPNElement transposition(const Context& ctx, unsigned i, unsigned j);
    // r_{ij}^{(k)} = t_i^k t_j^{-k} (i,j)
    static GPNElement reflection(const Context& ctx, unsigned i, unsigned j, long k);

    const Context* context() const { return ctx_; }
    const std::vector<uint16_t>& texp() const { return texp_; }
    const Perm& perm() const { return perm_; }

    // Membership in G(ell,p,n): product of nonzero matrix entries is an
    // (ell/p)-th root of unity.
    bool in_gpn() const;
    bool is_reflection() const; // fixes a hyperplane of C^n

    GPNElement inverse() const;
    friend GPNElement operator*(const GPNElement& g, const GPNElement& h);
    GPNElement conjugate(const GPNElement& by) const; // by * this * by^{-1}

    bool operator==(const GPNElement& o) const { return texp_ == o.texp_ && perm_ == o.perm_; }
    bool operator<(const GPNElement& o) const {
        if (texp_ != o.texp_) return texp_ < o.texp_;
        return perm_ < o.perm_;
    }

private:
    const Context* ctx_ = nullptr;
    std::vector<uint16_t> texp_;
    Perm perm_;
};

// All reflections of G(ell,p,n): the r_{ij}^{(k)} for i<j, k in Z/ell, and
// the diagonal t_i^{kp} for k = 1..ell/p-1.
std::vector<GPNElement> enumerate_reflections(const Context& ctx);

// All elements of G(ell,p,n). Intended for small parameters only.
std::vector<GPNElement> enumerate_group(const Context& ctx);

// All elements of the diagonal subgroup A = {t^a : sum(a) = 0 mod p} as
// exponent vectors.
std::vector<std::vector<uint16_t>> enumerate_diagonal(const Context& ctx);

} // namespace chered
