#pragma once

#include <boost/multiprecision/cpp_int.hpp>

namespace chered {

// Exact rational scalar used throughout. All arithmetic in the library is
// exact; there is no floating-point mode.
using Rational = boost::multiprecision::cpp_rational;
using Integer = boost::multiprecision::cpp_int;

inline Rational rat(long num, long den = 1) { return Rational(num, den); }

} // namespace chered
