#pragma once

#include <stdexcept>
#include <string>

#include "chered/polyrep.hpp"

namespace chered {

struct ParseError : std::runtime_error {
    size_t column; // 1-based offset into the input
    ParseError(const std::string& what, size_t col)
        : std::runtime_error(what + " (column " + std::to_string(col) + ")"), column(col) {}
};

// Word grammar. Atoms: t<i>, u<i>, s<i> (the transposition (i,i+1)), sig,
// tau, x<i>, y<i>. Composition by juxtaposition or '*', with the leftmost
// factor acting last; '^<int>' raises an atom to a nonnegative power.
// Whitespace is ignored. x/y atoms expand through standard_gen_word.
Word parse_word(const std::string& expr, const Context& ctx);

// Polynomial grammar over the representation: terms built from U<i>, T<i>,
// h (hbar), k (kappa), s<m>, z (the root of unity), integer/rational
// constants, '+', '-', '*', '^', and parentheses.
PolyRepElement parse_poly(const std::string& expr, const Context& ctx);

} // namespace chered
