// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>
#include <utility>

#include "errors.hpp"

namespace ladder {

/// Arbitrary-precision signed integer.
using Integer = boost::multiprecision::cpp_int;

/// Arbitrary-precision fraction. Always stored reduced to lowest terms with
/// a positive denominator, so equal values compare equal bit-for-bit.
using Rational = boost::multiprecision::cpp_rational;

/// Builds num/den, accepting any sign of den.
inline Rational make_rational(Integer num, Integer den) {
    if (den.is_zero()) {
        throw DivisionByZero("make_rational: zero denominator");
    }
    if (den < 0) {
        num = -num;
        den = -den;
    }
    return Rational(std::move(num), std::move(den));
}

/// Renders "num/den", or just "num" when the denominator is 1.
inline std::string to_string(const Rational& r) { return r.str(); }

/// Parses the output of to_string. Throws std::runtime_error on junk.
inline Rational parse_rational(const std::string& text) { return Rational(text); }

/// Nearest double. Values beyond double range become +/-infinity.
inline double to_double(const Rational& r) { return r.template convert_to<double>(); }

/// -1, 0, or +1.
inline int sign_of(const Rational& r) {
    if (r < 0) return -1;
    return r > 0 ? 1 : 0;
}

} // namespace ladder
