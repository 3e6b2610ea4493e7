// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <algorithm>
#include <stdexcept>
#include <string>
#include <utility>

#include "ladder_spec.hpp"
#include "rational.hpp"

// Effective resistances on the ladder by literal circuit reduction: series
// and parallel composition plus the triangle-to-star transform, over exact
// rationals. Nothing in this header touches sqrt(3) or the closed forms in
// closed_forms.hpp: the two routes share no code on purpose, so agreement
// between them is evidence, not tautology.

namespace ladder {

/// Resistors end to end.
inline Rational series(const Rational& r1, const Rational& r2) {
    if (r1 < 0 || r2 < 0) {
        throw std::domain_error("series: resistances must be >= 0");
    }
    return r1 + r2;
}

/// Resistors side by side: r1 r2 / (r1 + r2).
inline Rational parallel(const Rational& r1, const Rational& r2) {
    if (r1 < 0 || r2 < 0) {
        throw std::domain_error("parallel: resistances must be >= 0");
    }
    if (r1.is_zero() && r2.is_zero()) {
        throw DivisionByZero("parallel: both branches are zero");
    }
    return r1 * r2 / (r1 + r2);
}

/// Star equivalent of three pairwise resistances between terminals 1, 2, 3:
/// arm_k meets the others at the star's center, and arm_i + arm_j recovers
/// r_ij. Throws NonRealizableStar when a half-sum would go negative.
struct StarArms {
    Rational arm_1;
    Rational arm_2;
    Rational arm_3;
};

inline StarArms star_from_triangle(const Rational& r12, const Rational& r13,
                                   const Rational& r23) {
    if (r12 < 0 || r13 < 0 || r23 < 0) {
        throw std::domain_error("star_from_triangle: resistances must be >= 0");
    }
    StarArms arms{(r12 + r13 - r23) / 2, (r12 + r23 - r13) / 2, (r13 + r23 - r12) / 2};
    if (arms.arm_1 < 0 || arms.arm_2 < 0 || arms.arm_3 < 0) {
        throw NonRealizableStar("star_from_triangle: triangle inequality fails for " +
                                to_string(r12) + ", " + to_string(r13) + ", " + to_string(r23));
    }
    return arms;
}

namespace detail {

inline void require_rungs_reduction(int n) {
    if (n < 1) {
        throw std::domain_error("ladder needs at least one rung, got " + std::to_string(n));
    }
}

/// One more column on the right: the new rung sits in parallel with
/// [rail, old end rung, rail] in series.
inline Rational grow_end_rung(const Rational& z) {
    return parallel(Rational(1), series(Rational(1), series(z, Rational(1))));
}

} // namespace detail

/// r(p_n, q_n) grown column by column from the single rung, z = 1.
inline Rational last_rung_by_recurrence(int n) {
    detail::require_rungs_reduction(n);
    Rational z = 1;
    for (int k = 1; k < n; ++k) {
        z = detail::grow_end_rung(z);
    }
    return z;
}

/// {r(p_n, p_1), r(p_n, q_1)} grown column by column. Each step reduces the
/// current ladder to a star on {p_k, q_k, p_1} and hangs the new column on
/// its arms; the rail-swap symmetry r(p_{k+1}, q_1) = r(q_{k+1}, p_1) makes
/// the two updates mirror images.
inline std::pair<Rational, Rational> spans_by_recurrence(int n) {
    detail::require_rungs_reduction(n);
    Rational x = 0; // r(p_k, p_1)
    Rational y = 1; // r(p_k, q_1)
    Rational z = 1; // r(p_k, q_k)
    for (int k = 1; k < n; ++k) {
        const StarArms arms = star_from_triangle(z, x, y);
        const Rational x_next = series(
            parallel(series(Rational(1), arms.arm_1), series(Rational(2), arms.arm_2)),
            arms.arm_3);
        const Rational y_next = series(
            parallel(series(Rational(1), arms.arm_2), series(Rational(2), arms.arm_1)),
            arms.arm_3);
        x = x_next;
        y = y_next;
        z = detail::grow_end_rung(z);
    }
    return {x, y};
}

/// r(p_n, p_1) - r(p_n, q_1) as the telescoping product
/// -prod_{k=1}^{n-1} 1 / (z_k + 3); the gap shrinks by exactly 1/(z_k + 3)
/// per added column.
inline Rational span_difference_by_product(int n) {
    detail::require_rungs_reduction(n);
    Rational gap = -1; // x_1 - y_1
    Rational z = 1;
    for (int k = 1; k < n; ++k) {
        gap /= z + 3;
        z = detail::grow_end_rung(z);
    }
    return gap;
}

/// r(p_n, q_n) as the continued fraction [0; 1, 2, 1, 2, ..., 1] with n ones
/// and n - 1 twos, evaluated exactly from the tail.
inline Rational last_rung_by_continued_fraction(int n) {
    detail::require_rungs_reduction(n);
    Rational acc = 1; // final partial quotient
    for (int k = 2 * n - 2; k >= 1; --k) {
        acc = (k % 2 == 0 ? 2 : 1) + 1 / acc;
    }
    return 1 / acc;
}

/// {r(p_n, p_i), r(p_n, q_i), r(p_i, q_i)} by splitting the ladder at
/// column i.
struct CornerColumnTriple {
    Rational to_rail;  // r(p_n, p_i)
    Rational to_cross; // r(p_n, q_i)
    Rational rung;     // r(p_i, q_i)
};

inline CornerColumnTriple corner_column_by_reduction(int n, int i) {
    detail::require_rungs_reduction(n);
    if (i < 1 || i > n) {
        throw std::domain_error("column index " + std::to_string(i) + " outside 1.." +
                                std::to_string(n));
    }
    if (i == n) {
        const Rational z = last_rung_by_recurrence(n);
        return {Rational(0), z, z};
    }
    // Right of column i sits a ladder on columns i+1..n, reaching the split
    // through one rail edge per side; left of it, everything through column
    // i collapses to its end-rung resistance between p_i and q_i.
    const auto [x_far, y_far] = spans_by_recurrence(n - i);
    const Rational z_far = last_rung_by_recurrence(n - i);
    const Rational z_near = last_rung_by_recurrence(i);
    const StarArms arms = star_from_triangle(series(z_far, Rational(2)),
                                             series(x_far, Rational(1)),
                                             series(y_far, Rational(1)));
    return {
        series(arms.arm_3, parallel(arms.arm_1, series(z_near, arms.arm_2))),
        series(arms.arm_3, parallel(arms.arm_2, series(z_near, arms.arm_1))),
        parallel(z_near, series(z_far, Rational(2))),
    };
}

/// {r(p_i, p_j), r(q_i, p_j)} for n >= i >= j >= 1, by two splits: first the
/// sub-ladder through column i is reduced to a star on {p_i, q_i, p_j}, then
/// the rest of the ladder closes the loop between p_i and q_i.
inline std::pair<Rational, Rational> pair_by_reduction(int n, int i, int j) {
    detail::require_rungs_reduction(n);
    if (!(n >= i && i >= j && j >= 1)) {
        throw std::domain_error("column indices must satisfy n >= i >= j >= 1, got n=" +
                                std::to_string(n) + " i=" + std::to_string(i) +
                                " j=" + std::to_string(j));
    }
    const CornerColumnTriple corner = corner_column_by_reduction(i, j);
    // Within the sub-ladder, r(q_i, p_j) = r(p_i, q_j) by the rail swap.
    const Rational& to_rail = corner.to_rail;
    const Rational& to_cross = corner.to_cross;
    if (i == n) {
        return {to_rail, to_cross};
    }
    const Rational z_near = last_rung_by_recurrence(i);
    const Rational right = series(last_rung_by_recurrence(n - i), Rational(2));
    const StarArms arms = star_from_triangle(z_near, to_rail, to_cross);
    return {
        series(arms.arm_3, parallel(arms.arm_1, series(right, arms.arm_2))),
        series(arms.arm_3, parallel(arms.arm_2, series(right, arms.arm_1))),
    };
}

/// r(a, b) for any two vertices, all through reductions.
inline Rational resistance_by_reduction(const LadderSpec& spec, VertexRef a, VertexRef b) {
    spec.require(a);
    spec.require(b);
    if (a == b) return Rational(0);
    const int hi = std::max(a.index, b.index);
    const int lo = std::min(a.index, b.index);
    const auto [rail, cross] = pair_by_reduction(spec.n(), hi, lo);
    return a.side == b.side ? rail : cross;
}

} // namespace ladder
