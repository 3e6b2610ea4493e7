// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <algorithm>
#include <stdexcept>
#include <string>
#include <utility>

#include "ladder_spec.hpp"
#include "sequences.hpp"
#include "surd3.hpp"

namespace ladder {

// Effective resistances on the n-rung ladder with unit edges, evaluated in
// closed form over Q(sqrt(3)). Every formula is a combination of powers of
// alpha = 2 - sqrt(3); the sqrt(3) parts always cancel, so each public
// function hands back an exact Rational (via Surd3::to_rational, which turns
// any cancellation failure into a loud IrrationalityError instead of a wrong
// number). The *_gfib variants reach the same values through the integer
// sequence gen_fib alone and exist to be checked against the alpha forms.

namespace detail {

inline void require_rungs(int n) {
    if (n < 1) {
        throw std::domain_error("ladder needs at least one rung, got " + std::to_string(n));
    }
}

inline void require_column(int n, int i) {
    require_rungs(n);
    if (i < 1 || i > n) {
        throw std::domain_error("column index " + std::to_string(i) +
                                " outside 1.." + std::to_string(n));
    }
}

inline void require_column_pair(int n, int i, int j) {
    require_rungs(n);
    if (!(n >= i && i >= j && j >= 1)) {
        throw std::domain_error("column indices must satisfy n >= i >= j >= 1, got n=" +
                                std::to_string(n) + " i=" + std::to_string(i) +
                                " j=" + std::to_string(j));
    }
}

/// 1 / (1 - alpha^{2n}), the denominator shared by every resistance formula.
inline Surd3 end_denominator_inverse(int n) {
    return (1 - alpha().pow(2LL * n)).inverse();
}

/// 1 / (4 sqrt(3)) = sqrt(3) / 12.
inline const Surd3& quarter_root_inverse() {
    static const Surd3 value(Rational(0), make_rational(1, 12));
    return value;
}

} // namespace detail

/// r(p_n, q_n) across the last rung, kept in the field:
/// -1 - sqrt(3) + 2 sqrt(3) / (1 - alpha^{2n}).
inline Surd3 last_rung_surd(int n) {
    detail::require_rungs(n);
    const Surd3 root = Surd3::sqrt3();
    return -1 - root + 2 * root * detail::end_denominator_inverse(n);
}

inline Rational last_rung_resistance(int n) { return last_rung_surd(n).to_rational(); }

/// r(p_n, p_1) between the two corners of one rail:
/// (n - 2 - sqrt(3)) / 2 + sqrt(3) / (1 + alpha^n).
inline Surd3 rail_span_surd(int n) {
    detail::require_rungs(n);
    const Surd3 root = Surd3::sqrt3();
    const Surd3 head = (Surd3(n - 2) - root) * Surd3(make_rational(1, 2));
    return head + root * (1 + alpha().pow(n)).inverse();
}

inline Rational rail_span_resistance(int n) { return rail_span_surd(n).to_rational(); }

/// r(p_n, q_1) between diagonally opposite corners:
/// (n - 2 - sqrt(3)) / 2 + sqrt(3) / (1 - alpha^n).
inline Surd3 diagonal_span_surd(int n) {
    detail::require_rungs(n);
    const Surd3 root = Surd3::sqrt3();
    const Surd3 head = (Surd3(n - 2) - root) * Surd3(make_rational(1, 2));
    return head + root * (1 - alpha().pow(n)).inverse();
}

inline Rational diagonal_span_resistance(int n) { return diagonal_span_surd(n).to_rational(); }

/// r(p_n, p_1) - r(p_n, q_1), the gap between the two corner spans:
/// -2 sqrt(3) / (alpha^-n - alpha^n). Negative, shrinking like alpha^n.
inline Surd3 span_difference_surd(int n) {
    detail::require_rungs(n);
    return -2 * Surd3::sqrt3() * (alpha().pow(-n) - alpha().pow(n)).inverse();
}

inline Rational span_difference(int n) { return span_difference_surd(n).to_rational(); }

/// r(p_i, p_j) for two vertices on the same rail, n >= i >= j >= 1.
inline Rational rail_resistance(int n, int i, int j) {
    detail::require_column_pair(n, i, j);
    const Surd3& a = alpha();
    const Surd3 prefix =
        (1 - a.pow(i - j)) * detail::end_denominator_inverse(n) * detail::quarter_root_inverse();
    const Surd3 tail = 2 - a.pow(i + j - 1) + a.pow(2LL * j - 1) +
                       a.pow(2LL * n - 2 * i + 1) * (1 - a.pow(i - j) - 2 * a.pow(i + j - 1));
    return (Surd3(make_rational(i - j, 2)) + prefix * tail).to_rational();
}

/// r(q_i, p_j) for two vertices on opposite rails, n >= i >= j >= 1.
/// Same shape as rail_resistance with every sign flipped to +.
inline Rational cross_resistance(int n, int i, int j) {
    detail::require_column_pair(n, i, j);
    const Surd3& a = alpha();
    const Surd3 prefix =
        (1 + a.pow(i - j)) * detail::end_denominator_inverse(n) * detail::quarter_root_inverse();
    const Surd3 tail = 2 + a.pow(i + j - 1) + a.pow(2LL * j - 1) +
                       a.pow(2LL * n - 2 * i + 1) * (1 + a.pow(i - j) + 2 * a.pow(i + j - 1));
    return (Surd3(make_rational(i - j, 2)) + prefix * tail).to_rational();
}

/// r(p_i, q_i) across rung i:
/// (1 + alpha^{2n-2i+1}) (1 + alpha^{2i-1}) / (sqrt(3) (1 - alpha^{2n})).
inline Rational rung_resistance(int n, int i) {
    detail::require_column(n, i);
    const Surd3& a = alpha();
    const Surd3 value = (1 + a.pow(2LL * n - 2 * i + 1)) * (1 + a.pow(2LL * i - 1)) *
                        detail::end_denominator_inverse(n) * Surd3::sqrt3().inverse();
    return value.to_rational();
}

/// {r(p_n, p_i), r(p_n, q_i)}: the corner vertex against both vertices of
/// column i, n >= i >= 1.
inline std::pair<Rational, Rational> corner_column_resistances(int n, int i) {
    detail::require_column(n, i);
    const Surd3& a = alpha();
    const Surd3 scale = detail::end_denominator_inverse(n) * detail::quarter_root_inverse();
    const Surd3 half_gap(make_rational(n - i, 2));

    const Surd3 same_tail = 2 - 2 * a.pow(n + i) - a.pow(n + i - 1) - a.pow(n - i + 1) +
                            a.pow(2LL * i - 1) + a;
    const Surd3 same = half_gap + (1 - a.pow(n - i)) * scale * same_tail;

    const Surd3 cross_tail = 2 + 2 * a.pow(n + i) + a.pow(n + i - 1) + a.pow(n - i + 1) +
                             a.pow(2LL * i - 1) + a;
    const Surd3 cross = half_gap + (1 + a.pow(n - i)) * scale * cross_tail;

    return {same.to_rational(), cross.to_rational()};
}

/// r(a, b) for any two vertices, dispatching on the pair's geometry.
/// Uses the ladder's symmetries: swapping the rails is an automorphism,
/// so r(q_i, q_j) = r(p_i, p_j) and r(p_i, q_j) = r(q_i, p_j).
inline Rational resistance(const LadderSpec& spec, VertexRef a, VertexRef b) {
    spec.require(a);
    spec.require(b);
    if (a == b) return Rational(0);
    const int hi = std::max(a.index, b.index);
    const int lo = std::min(a.index, b.index);
    if (a.side == b.side) {
        return rail_resistance(spec.n(), hi, lo);
    }
    return cross_resistance(spec.n(), hi, lo);
}

/// Kirchhoff index: the sum of r over all unordered vertex pairs, in one
/// closed form: n^3/3 - (n^2/sqrt(3)) (1 - 2/(1 - alpha^{2n})).
inline Rational kirchhoff(int n) {
    detail::require_rungs(n);
    const Integer nn = n;
    const Surd3 bracket = 1 - 2 * detail::end_denominator_inverse(n);
    const Surd3 scale(Rational(0), make_rational(nn * nn, 3)); // n^2/sqrt(3) = n^2 sqrt(3)/3
    const Surd3 value = Surd3(make_rational(nn * nn * nn, 3)) - scale * bracket;
    return value.to_rational();
}

// ---------------------------------------------------------------------------
// gen_fib forms: the same quantities through the integer sequence.

/// r(p_n, p_1) - r(p_n, q_1) = -1 / gen_fib(n).
inline Rational span_difference_gfib(int n) {
    detail::require_rungs(n);
    return make_rational(-1, gen_fib(n));
}

/// r(p_n, q_n) = -1 + gen_fib(2n) / (2 gen_fib(n)^2).
inline Rational last_rung_gfib(int n) {
    detail::require_rungs(n);
    const Integer g = gen_fib(n);
    return -1 + make_rational(gen_fib(2LL * n), 2 * g * g);
}

/// r(p_n, p_1) = (n - 2)/2 + (gen_fib(2n) - 2 gen_fib(n)) / (4 gen_fib(n)^2).
inline Rational rail_span_gfib(int n) {
    detail::require_rungs(n);
    const Integer g = gen_fib(n);
    return make_rational(n - 2, 2) + make_rational(gen_fib(2LL * n) - 2 * g, 4 * g * g);
}

/// r(p_n, q_1) = (n - 2)/2 + 3 gen_fib(n)^2 / (gen_fib(2n) - 2 gen_fib(n)).
inline Rational diagonal_span_gfib(int n) {
    detail::require_rungs(n);
    const Integer g = gen_fib(n);
    return make_rational(n - 2, 2) + make_rational(3 * g * g, gen_fib(2LL * n) - 2 * g);
}

namespace detail {

/// 1 + (gen_fib(2n) / (6 gen_fib(n)^2)) sqrt(3), which collapses to
/// 2 / (1 - alpha^{2n}): the gfib pair formulas share it as a scale factor.
inline Surd3 end_denominator_gfib(int n) {
    const Integer g = gen_fib(n);
    return Surd3(Rational(1), make_rational(gen_fib(2LL * n), 6 * g * g));
}

/// 1 / (8 sqrt(3)) = sqrt(3) / 24.
inline const Surd3& eighth_root_inverse() {
    static const Surd3 value(Rational(0), make_rational(1, 24));
    return value;
}

} // namespace detail

/// rail_resistance rebuilt from gen_fib: alpha^k enters only as
/// alpha_power_from_gen_fib(k), and the shared denominator as the scale of
/// end_denominator_gfib.
inline Rational rail_resistance_gfib(int n, int i, int j) {
    detail::require_column_pair(n, i, j);
    const auto g = [](long long k) { return alpha_power_from_gen_fib(k); };
    const Surd3 bracket = (1 - g(i + j - 1)) * (1 + g(2LL * n - 2 * i + 1)) +
                          (1 + g(2LL * j - 1)) * (1 - g(2LL * n - i - j + 1));
    const Surd3 value = Surd3(make_rational(i - j, 2)) +
                        (1 - g(i - j)) * detail::eighth_root_inverse() *
                            detail::end_denominator_gfib(n) * bracket;
    return value.to_rational();
}

/// cross_resistance rebuilt from gen_fib; all signs flip to +.
inline Rational cross_resistance_gfib(int n, int i, int j) {
    detail::require_column_pair(n, i, j);
    const auto g = [](long long k) { return alpha_power_from_gen_fib(k); };
    const Surd3 bracket = (1 + g(i + j - 1)) * (1 + g(2LL * n - 2 * i + 1)) +
                          (1 + g(2LL * j - 1)) * (1 + g(2LL * n - i - j + 1));
    const Surd3 value = Surd3(make_rational(i - j, 2)) +
                        (1 + g(i - j)) * detail::eighth_root_inverse() *
                            detail::end_denominator_gfib(n) * bracket;
    return value.to_rational();
}

/// Kirchhoff index from gen_fib alone: n^3/3 + n^2 gen_fib(2n) / (6 gen_fib(n)^2).
inline Rational kirchhoff_gfib(int n) {
    detail::require_rungs(n);
    const Integer nn = n;
    const Integer g = gen_fib(n);
    return make_rational(nn * nn * nn, 3) + make_rational(nn * nn * gen_fib(2LL * n), 6 * g * g);
}

} // namespace ladder
