#pragma once

#include <string>

#include "chered/polyrep.hpp"

namespace chered {

// Canonical human-readable rendering: T-free elements print as plain
// polynomials, mixed elements group by T-monomial in ascending texp order.
std::string pretty(const PolyRepElement& f);

} // namespace chered
