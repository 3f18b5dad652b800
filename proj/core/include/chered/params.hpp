#pragma once

#include <vector>

#include "chered/parampoly.hpp"

namespace chered {

// Parameter calculus relating the three coordinate systems for the
// deformation parameters: the c-vector (one entry per diagonal reflection
// class), its Fourier transform h, and the shifted variables s_m = h_m + m*hbar.

// h_r = sum_{s=1}^{ell-1} c_s zeta^{rs}, r = 0..ell-1. Input c is indexed
// 1..ell-1 (c[0] corresponds to c_1).
std::vector<ParamPoly> fourier_c_to_h(const std::vector<ParamPoly>& c, const Context& ctx);

// c_s = (1/ell) sum_r h_r zeta^{-rs}, s = 1..ell-1. Inverse of the above on
// vectors with sum_r h_r = 0 (which holds for every h in the image).
std::vector<ParamPoly> fourier_h_to_c(const std::vector<ParamPoly>& h, const Context& ctx);

enum class ParamKind { C, H, S };

struct PCyclicResult {
    bool cond_c;       // c_k = 0 whenever p does not divide k
    bool cond_h;       // h_r = h_{r + ell/p} for all r
    bool cond_s;       // s_m + (ell/p) hbar = s_{m + ell/p} for all m
    bool equivalent;   // all three agree
    bool all_hold() const { return cond_c && cond_h && cond_s; }
};

// Evaluates the three p-cyclicity conditions on one supplied vector
// (c indexed 1..ell-1, or h indexed 0..ell-1, or s indexed 0..ell-1) and
// reports whether they agree. Throws std::invalid_argument on a length
// mismatch.
PCyclicResult p_cyclic_check(const std::vector<ParamPoly>& vec, ParamKind kind,
                             const Context& ctx);

} // namespace chered
