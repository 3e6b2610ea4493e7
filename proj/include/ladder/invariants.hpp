// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <optional>
#include <stdexcept>
#include <string>

#include "closed_forms.hpp"
#include "oracle.hpp"
#include "surd3.hpp"

// Metrized-graph invariants of the unit-edge ladder. Each one comes in a
// closed alpha-power form; tau and theta also in their definitional-sum
// forms, and everything again through gen_fib. The invariants that divide
// by the genus (phi, epsilon, zcap) are undefined on the one-rung ladder,
// which is a tree.

namespace ladder {

namespace detail {

/// 1 - 2 / (1 - alpha^{2n}), the factor every invariant shares. Equals
/// -sqrt(3) gen_fib(2n) / (6 gen_fib(n)^2) and tends to -1/sqrt(3).
inline Surd3 invariant_bracket(int n) {
    return 1 - 2 * end_denominator_inverse(n);
}

inline void require_positive_genus(int n, const char* who) {
    require_rungs(n);
    if (n < 2) {
        throw std::domain_error(std::string(who) + ": undefined on the one-rung ladder (genus 0)");
    }
}

} // namespace detail

/// tau: (9n - 20)/36 + ((n - 6)/(6 sqrt(3))) (1 - 2/(1 - alpha^{2n})).
inline Rational tau_closed(int n) {
    detail::require_rungs(n);
    const Integer nn = n;
    const Surd3 value = Surd3(make_rational(9 * nn - 20, 36)) +
                        Surd3(Rational(0), make_rational(nn - 6, 18)) *
                            detail::invariant_bracket(n);
    return value.to_rational();
}

/// theta: (2(n - 2)/3) (n^2 - 4n + 10 - (n - 6) sqrt(3) (1 - 2/(1 - alpha^{2n}))).
inline Rational theta_closed(int n) {
    detail::require_rungs(n);
    const Integer nn = n;
    const Surd3 inner = Surd3(Rational(nn * nn - 4 * nn + 10)) -
                        Surd3(Rational(0), Rational(nn - 6)) * detail::invariant_bracket(n);
    return (Surd3(make_rational(2 * (nn - 2), 3)) * inner).to_rational();
}

/// lambda: n(n + 4)(n - 1) / (12(2n - 1)), rational for every n.
inline Rational lambda_closed(int n) {
    detail::require_rungs(n);
    const Integer nn = n;
    return make_rational(nn * (nn + 4) * (nn - 1), 12 * (2 * nn - 1));
}

/// phi: (3n^3 - 9n^2 - 5n + 1)/(18(n - 1))
///      + ((n - 6)(2n - 1)/(6 sqrt(3) (n - 1))) (1 - 2/(1 - alpha^{2n})).
inline Rational phi_closed(int n) {
    detail::require_positive_genus(n, "phi_closed");
    const Integer nn = n;
    const Surd3 value =
        Surd3(make_rational(3 * nn * nn * nn - 9 * nn * nn - 5 * nn + 1, 18 * (nn - 1))) +
        Surd3(Rational(0), make_rational((nn - 6) * (2 * nn - 1), 18 * (nn - 1))) *
            detail::invariant_bracket(n);
    return value.to_rational();
}

/// epsilon: ((3n^2 - 3n + 10)(n - 2))/(9(n - 1))
///          - ((n - 2)(n - 6)/(3 sqrt(3) (n - 1))) (1 - 2/(1 - alpha^{2n})).
inline Rational epsilon_closed(int n) {
    detail::require_positive_genus(n, "epsilon_closed");
    const Integer nn = n;
    const Surd3 value =
        Surd3(make_rational((3 * nn * nn - 3 * nn + 10) * (nn - 2), 9 * (nn - 1))) -
        Surd3(Rational(0), make_rational((nn - 2) * (nn - 6), 9 * (nn - 1))) *
            detail::invariant_bracket(n);
    return value.to_rational();
}

/// zcap: ((3n^2 - 13) n)/(36(n - 1)^2)
///       + (n(n - 6)/(12 sqrt(3) (n - 1)^2)) (1 - 2/(1 - alpha^{2n})).
inline Rational zcap_closed(int n) {
    detail::require_positive_genus(n, "zcap_closed");
    const Integer nn = n;
    const Integer genus2 = (nn - 1) * (nn - 1);
    const Surd3 value = Surd3(make_rational((3 * nn * nn - 13) * nn, 36 * genus2)) +
                        Surd3(Rational(0), make_rational(nn * (nn - 6), 36 * genus2)) *
                            detail::invariant_bracket(n);
    return value.to_rational();
}

/// theta straight from its definition: the sum over ordered vertex pairs of
/// (deg(a) - 2)(deg(b) - 2) r(a, b). Only the four corners have degree != 3,
/// so most terms vanish.
inline Rational theta_definition(int n) {
    detail::require_rungs(n);
    const LadderSpec spec(n);
    const LadderGraph graph(n);
    const auto verts = spec.vertices();
    Rational total = 0;
    for (const VertexRef a : verts) {
        const int wa = graph.degree(a) - 2;
        if (wa == 0) continue;
        for (const VertexRef b : verts) {
            const int wb = graph.degree(b) - 2;
            if (wb == 0 || a == b) continue;
            total += wa * wb * resistance(spec, a, b);
        }
    }
    return total;
}

/// tau from its edge-sum form with base point s:
/// (1/12) sum_edges (1 - r(u, v))^2 + (1/4) sum_edges (r(s, u) - r(s, v))^2.
/// The value does not depend on s; tests sweep every base point.
inline Rational tau_edge_sum(int n, VertexRef base) {
    detail::require_rungs(n);
    const LadderSpec spec(n);
    spec.require(base);
    const LadderGraph graph(n);
    Rational length_part = 0;
    Rational potential_part = 0;
    for (const auto& [u, v] : graph.edges()) {
        const Rational r_uv = resistance(spec, u, v);
        length_part += (1 - r_uv) * (1 - r_uv);
        const Rational gap = resistance(spec, base, u) - resistance(spec, base, v);
        potential_part += gap * gap;
    }
    return length_part / 12 + potential_part / 4;
}

/// All admissible invariants of one ladder; phi, epsilon and zcap are left
/// empty on the one-rung ladder where the genus vanishes.
struct InvariantSet {
    int n = 0;
    Rational tau;
    Rational theta;
    Rational lambda;
    std::optional<Rational> phi;
    std::optional<Rational> epsilon;
    std::optional<Rational> zcap;
};

inline InvariantSet invariants_closed(int n) {
    detail::require_rungs(n);
    InvariantSet out;
    out.n = n;
    out.tau = tau_closed(n);
    out.theta = theta_closed(n);
    out.lambda = lambda_closed(n);
    if (n >= 2) {
        out.phi = phi_closed(n);
        out.epsilon = epsilon_closed(n);
        out.zcap = zcap_closed(n);
    }
    return out;
}

// ---------------------------------------------------------------------------
// gen_fib forms: substitute sqrt(3)(1 - 2/(1 - alpha^{2n})) =
// -gen_fib(2n) / (2 gen_fib(n)^2) and every invariant turns into pure
// rational arithmetic on the integer sequence.

inline InvariantSet invariants_gfib(int n) {
    detail::require_rungs(n);
    const Integer nn = n;
    const Integer g = gen_fib(n);
    const Rational ratio = make_rational(gen_fib(2LL * n), 2 * g * g); // -sqrt(3) * bracket

    InvariantSet out;
    out.n = n;
    out.tau = make_rational(9 * nn - 20, 36) - make_rational(nn - 6, 18) * ratio;
    out.theta = make_rational(2 * (nn - 2), 3) *
                (Rational(nn * nn - 4 * nn + 10) + Rational(nn - 6) * ratio);
    out.lambda = make_rational(nn * (nn + 4) * (nn - 1), 12 * (2 * nn - 1));
    if (n >= 2) {
        out.phi = make_rational(3 * nn * nn * nn - 9 * nn * nn - 5 * nn + 1, 18 * (nn - 1)) -
                  make_rational((nn - 6) * (2 * nn - 1), 18 * (nn - 1)) * ratio;
        out.epsilon = make_rational((3 * nn * nn - 3 * nn + 10) * (nn - 2), 9 * (nn - 1)) +
                      make_rational((nn - 2) * (nn - 6), 9 * (nn - 1)) * ratio;
        const Integer genus2 = (nn - 1) * (nn - 1);
        out.zcap = make_rational((3 * nn * nn - 13) * nn, 36 * genus2) -
                   make_rational(nn * (nn - 6), 36 * genus2) * ratio;
    }
    return out;
}

// ---------------------------------------------------------------------------
// Scaling limits. Divided by the right powers of total length and genus,
// every invariant converges; the limits below are exact.

struct InvariantRatios {
    double tau_per_length;
    double zcap_per_length;
    double phi_per_genus_length;
    double epsilon_per_genus_length;
    double lambda_per_genus_length;
    double theta_per_genus_sq_length;
};

inline InvariantRatios invariant_ratios(int n) {
    detail::require_positive_genus(n, "invariant_ratios");
    const LadderSpec spec(n);
    const double length = spec.total_length();
    const double genus = spec.genus();
    return {
        to_double(tau_closed(n)) / length,
        to_double(zcap_closed(n)) / length,
        to_double(phi_closed(n)) / (genus * length),
        to_double(epsilon_closed(n)) / (genus * length),
        to_double(lambda_closed(n)) / (genus * length),
        to_double(theta_closed(n)) / (genus * genus * length),
    };
}

/// Where those ratios go as n grows.
inline InvariantRatios invariant_ratio_limits() {
    const double s3 = std::sqrt(3.0);
    return {
        (9.0 - 2.0 * s3) / 108.0, // tau / length
        1.0 / 36.0,               // zcap / length
        1.0 / 18.0,               // phi / (genus length)
        1.0 / 9.0,                // epsilon / (genus length)
        1.0 / 72.0,               // lambda / (genus length)
        2.0 / 9.0,                // theta / (genus^2 length)
    };
}

} // namespace ladder
