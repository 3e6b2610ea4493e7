// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstddef>
#include <stdexcept>
#include <utility>
#include <vector>

#include "surd3.hpp"

namespace ladder {

namespace detail {

inline void require_index(long long n, const char* who) {
    if (n < 0) {
        throw std::domain_error(std::string(who) + ": index must be >= 0");
    }
}

/// {s[n], s[n+1]} of the recurrence s[0] = 0, s[1] = 1, s[k+2] = 4 s[k+1] - s[k].
inline std::pair<Integer, Integer> gen_fib_pair(long long n) {
    Integer lo = 0;
    Integer hi = 1;
    for (long long k = 0; k < n; ++k) {
        Integer next = 4 * hi - lo;
        lo = std::move(hi);
        hi = std::move(next);
    }
    return {std::move(lo), std::move(hi)};
}

} // namespace detail

/// Grow-on-demand table of 0, 1, 4, 15, 56, 209, ... (OEIS A001353), the
/// sequence that counts spanning trees of the n-rung ladder and clears the
/// sqrt(3) from every closed form here.
class GenFibCache {
public:
    GenFibCache() : values_{Integer(0), Integer(1)} {}

    const Integer& value(std::size_t n) {
        while (values_.size() <= n) {
            const std::size_t k = values_.size();
            values_.push_back(4 * values_[k - 1] - values_[k - 2]);
        }
        return values_[n];
    }

    std::size_t size() const { return values_.size(); }

private:
    std::vector<Integer> values_;
};

/// n-th term of A001353 by the plain integer recurrence.
inline Integer gen_fib(long long n) {
    detail::require_index(n, "gen_fib");
    return detail::gen_fib_pair(n).first;
}

/// Same term evaluated through the field: (alpha^-n - alpha^n) / (2 sqrt(3)).
/// The sqrt(3) parts must cancel to an integer; anything else throws.
inline Integer gen_fib_binet(long long n) {
    detail::require_index(n, "gen_fib_binet");
    const Surd3 diff = alpha().pow(-n) - alpha().pow(n);
    const Rational value = (diff / (2 * Surd3::sqrt3())).to_rational();
    if (denominator(value) != 1) {
        throw IrrationalityError("gen_fib_binet: result " + value.str() + " is not an integer");
    }
    return numerator(value);
}

/// Reconstructs alpha^n from two consecutive sequence terms:
/// alpha^n = 1 / (s[n+1] - alpha * s[n]). Lets rational-only pipelines
/// re-enter the field without ever calling pow on alpha directly.
inline Surd3 alpha_power_from_gen_fib(long long n) {
    detail::require_index(n, "alpha_power_from_gen_fib");
    auto [lo, hi] = detail::gen_fib_pair(n);
    return (Surd3(std::move(hi)) - alpha() * Surd3(std::move(lo))).inverse();
}

/// Index-doubling step: s[2n] = s[n] * (alpha^-n + alpha^n) for n >= 1.
inline Integer gen_fib_doubled(long long n) {
    if (n < 1) {
        throw std::domain_error("gen_fib_doubled: index must be >= 1");
    }
    const Surd3 trace = alpha().pow(-n) + alpha().pow(n);
    const Rational value = (Surd3(gen_fib(n)) * trace).to_rational();
    if (denominator(value) != 1) {
        throw IrrationalityError("gen_fib_doubled: result " + value.str() + " is not an integer");
    }
    return numerator(value);
}

/// Chebyshev polynomial of the second kind evaluated at 2, standard
/// convention: U_0 = 1, U_1 = 4, U_{k+2} = 4 U_{k+1} - U_k. Shifts A001353
/// by one place: gen_fib(n) == chebyshev_u_at2(n - 1).
inline Integer chebyshev_u_at2(long long n) {
    detail::require_index(n, "chebyshev_u_at2");
    return detail::gen_fib_pair(n + 1).first;
}

/// Derivative U'_n at 2, from differentiating the recurrence:
/// U'_0 = 0, U'_1 = 2, U'_{k+2} = 2 U_{k+1} + 4 U'_{k+1} - U'_k.
inline Integer chebyshev_u_deriv_at2(long long n) {
    detail::require_index(n, "chebyshev_u_deriv_at2");
    Integer u_lo = 1;
    Integer u_hi = 4;
    Integer d_lo = 0;
    Integer d_hi = 2;
    for (long long k = 0; k < n; ++k) {
        Integer d_next = 2 * u_hi + 4 * d_hi - d_lo;
        Integer u_next = 4 * u_hi - u_lo;
        u_lo = std::move(u_hi);
        u_hi = std::move(u_next);
        d_lo = std::move(d_hi);
        d_hi = std::move(d_next);
    }
    return d_lo;
}

} // namespace ladder
