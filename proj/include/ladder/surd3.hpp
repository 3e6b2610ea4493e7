// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <boost/multiprecision/cpp_bin_float.hpp>

#include <string>

#include "rational.hpp"

namespace ladder {

/// Exact element a + b*sqrt(3) of the quadratic field Q(sqrt(3)).
///
/// The coefficient pair is unique because sqrt(3) is irrational, so the
/// defaulted equality below really is value equality. All arithmetic is
/// exact; nothing here ever rounds except to_double().
class Surd3 {
public:
    Surd3() = default;
    Surd3(int value) : a_(value) {}                         // NOLINT(google-explicit-constructor)
    Surd3(Integer value) : a_(std::move(value)) {}          // NOLINT(google-explicit-constructor)
    Surd3(Rational value) : a_(std::move(value)) {}         // NOLINT(google-explicit-constructor)
    Surd3(Rational rational_part, Rational root_coeff)
        : a_(std::move(rational_part)), b_(std::move(root_coeff)) {}

    static Surd3 sqrt3() { return Surd3(Rational(0), Rational(1)); }

    /// Coefficient of 1.
    const Rational& a() const { return a_; }
    /// Coefficient of sqrt(3).
    const Rational& b() const { return b_; }

    bool is_zero() const { return a_.is_zero() && b_.is_zero(); }
    bool is_rational() const { return b_.is_zero(); }

    friend bool operator==(const Surd3&, const Surd3&) = default;

    friend Surd3 operator+(const Surd3& x, const Surd3& y) {
        return Surd3(x.a_ + y.a_, x.b_ + y.b_);
    }
    friend Surd3 operator-(const Surd3& x, const Surd3& y) {
        return Surd3(x.a_ - y.a_, x.b_ - y.b_);
    }
    friend Surd3 operator-(const Surd3& x) { return Surd3(-x.a_, -x.b_); }
    friend Surd3 operator*(const Surd3& x, const Surd3& y) {
        return Surd3(x.a_ * y.a_ + 3 * x.b_ * y.b_, x.a_ * y.b_ + x.b_ * y.a_);
    }
    friend Surd3 operator/(const Surd3& x, const Surd3& y) { return x * y.inverse(); }

    Surd3& operator+=(const Surd3& y) { return *this = *this + y; }
    Surd3& operator-=(const Surd3& y) { return *this = *this - y; }
    Surd3& operator*=(const Surd3& y) { return *this = *this * y; }
    Surd3& operator/=(const Surd3& y) { return *this = *this / y; }

    /// Multiplicative inverse via the conjugate: 1/(a + b*sqrt(3)) =
    /// (a - b*sqrt(3)) / (a^2 - 3 b^2). The denominator vanishes only at
    /// zero itself, again because sqrt(3) is irrational.
    Surd3 inverse() const {
        const Rational norm = a_ * a_ - 3 * b_ * b_;
        if (norm.is_zero()) {
            throw DivisionByZero("Surd3::inverse: value is zero");
        }
        return Surd3(a_ / norm, -b_ / norm);
    }

    /// Integer power by repeated squaring; negative exponents go through
    /// inverse() first and so reject a zero base.
    Surd3 pow(long long k) const {
        if (k < 0) {
            return inverse().pow(-k);
        }
        Surd3 base = *this;
        Surd3 acc(1);
        for (unsigned long long e = static_cast<unsigned long long>(k); e != 0; e >>= 1) {
            if (e & 1) acc *= base;
            if (e > 1) base *= base;
        }
        return acc;
    }

    /// Exact sign, computed without any floating point. With coefficients of
    /// mixed sign, a + b*sqrt(3) has the sign of whichever of a^2 and 3 b^2
    /// is larger in magnitude (they cannot tie for nonzero rationals).
    int sign() const {
        const int sa = sign_of(a_);
        const int sb = sign_of(b_);
        if (sb == 0) return sa;
        if (sa == 0) return sb;
        if (sa == sb) return sa;
        return a_ * a_ > 3 * b_ * b_ ? sa : sb;
    }

    friend bool operator<(const Surd3& x, const Surd3& y) { return (x - y).sign() < 0; }
    friend bool operator>(const Surd3& x, const Surd3& y) { return y < x; }
    friend bool operator<=(const Surd3& x, const Surd3& y) { return !(y < x); }
    friend bool operator>=(const Surd3& x, const Surd3& y) { return !(x < y); }

    /// The underlying rational when the sqrt(3) part cancels; throws
    /// IrrationalityError otherwise.
    Rational to_rational() const {
        if (!b_.is_zero()) {
            throw IrrationalityError("Surd3::to_rational: sqrt(3) coefficient " + b_.str() +
                                     " does not vanish");
        }
        return a_;
    }

    /// Nearest double. Same-signed coefficients evaluate directly in
    /// 50-digit floating point, so the only rounding that matters is the
    /// final one. Opposite-signed coefficients can cancel almost entirely
    /// (alpha^40 loses 46 leading digits, more than any fixed precision),
    /// so those route through the conjugate: a + b*sqrt(3) =
    /// (a^2 - 3 b^2) / (a - b*sqrt(3)), whose numerator is exact rational
    /// arithmetic and whose denominator no longer cancels.
    double to_double() const {
        using BigFloat = boost::multiprecision::cpp_bin_float_50;
        if (sign_of(a_) * sign_of(b_) >= 0) {
            const BigFloat direct = BigFloat(a_) + BigFloat(b_) * sqrt(BigFloat(3));
            return direct.template convert_to<double>();
        }
        const Rational norm = a_ * a_ - 3 * b_ * b_;
        const BigFloat conjugate = BigFloat(a_) - BigFloat(b_) * sqrt(BigFloat(3));
        return (BigFloat(norm) / conjugate).template convert_to<double>();
    }

    /// Renders "a + b*sqrt(3)" with both coefficients as exact fractions.
    std::string str() const { return a_.str() + " + " + b_.str() + "*sqrt(3)"; }

private:
    Rational a_;
    Rational b_;
};

/// alpha = 2 - sqrt(3), the decay ratio of the ladder: every closed form in
/// this library is built from its integer powers. Its inverse is 2 + sqrt(3)
/// and the product of the two is exactly 1.
inline const Surd3& alpha() {
    static const Surd3 value(Rational(2), Rational(-1));
    return value;
}

} // namespace ladder
