// SPDX-License-Identifier: Apache-2.0
#include <catch2/catch_amalgamated.hpp>

#include <cmath>
#include <stdexcept>

#include "ladder/invariants.hpp"

using namespace ladder;

TEST_CASE("invariants of the smallest ladders") {
    CHECK(tau_closed(1) == make_rational(1, 4));
    CHECK(tau_closed(2) == make_rational(1, 3));
    CHECK(tau_closed(3) == make_rational(29, 60));
    CHECK(theta_closed(1) == 2);
    CHECK(theta_closed(2) == 0);
    CHECK(theta_closed(3) == make_rational(6, 5));
    CHECK(lambda_closed(1) == 0);
    CHECK(lambda_closed(2) == make_rational(1, 3));
    CHECK(lambda_closed(3) == make_rational(7, 10));
    CHECK(phi_closed(2) == 0);
    CHECK(phi_closed(3) == make_rational(1, 3));
    CHECK(epsilon_closed(2) == 0);
    CHECK(epsilon_closed(3) == make_rational(19, 15));
    CHECK(zcap_closed(2) == make_rational(1, 3));
    CHECK(zcap_closed(3) == make_rational(2, 5));
}

TEST_CASE("theta from its degree-weighted definition") {
    for (int n = 1; n <= 20; ++n) {
        REQUIRE(theta_definition(n) == theta_closed(n));
    }
}

TEST_CASE("tau from its edge sum, for every base point") {
    for (int n = 1; n <= 20; ++n) {
        REQUIRE(tau_edge_sum(n, p(1)) == tau_closed(n));
    }
    for (int n = 1; n <= 8; ++n) {
        const Rational want = tau_closed(n);
        for (const VertexRef base : LadderSpec(n).vertices()) {
            REQUIRE(tau_edge_sum(n, base) == want);
        }
    }
}

TEST_CASE("theta ties the Kirchhoff index to corner resistances") {
    // 2 Kf - theta = 8 sum_v r(v, p_n) - 4 [r(p_n, p_1) + r(p_n, q_1) + r(p_n, q_n)]
    for (int n = 1; n <= 20; ++n) {
        const LadderSpec spec(n);
        Rational corner_sum = 0;
        for (const VertexRef v : spec.vertices()) {
            corner_sum += resistance(spec, v, p(n));
        }
        const Rational rhs = 8 * corner_sum -
                             4 * (resistance(spec, p(n), p(1)) +
                                  resistance(spec, p(n), q(1)) +
                                  resistance(spec, p(n), q(n)));
        REQUIRE(2 * kirchhoff(n) - theta_closed(n) == rhs);
    }
}

TEST_CASE("generalized-Fibonacci forms agree with the alpha-power forms") {
    for (int n = 1; n <= 50; ++n) {
        const InvariantSet a = invariants_closed(n);
        const InvariantSet b = invariants_gfib(n);
        REQUIRE(a.n == b.n);
        REQUIRE(a.tau == b.tau);
        REQUIRE(a.theta == b.theta);
        REQUIRE(a.lambda == b.lambda);
        REQUIRE(a.phi == b.phi);
        REQUIRE(a.epsilon == b.epsilon);
        REQUIRE(a.zcap == b.zcap);
    }
}

TEST_CASE("genus-normalized invariants vanish or throw on the one-rung ladder") {
    CHECK_THROWS_AS(phi_closed(1), std::domain_error);
    CHECK_THROWS_AS(epsilon_closed(1), std::domain_error);
    CHECK_THROWS_AS(zcap_closed(1), std::domain_error);
    CHECK_THROWS_AS(invariant_ratios(1), std::domain_error);
    CHECK_THROWS_AS(invariants_closed(0), std::domain_error);

    const InvariantSet one = invariants_closed(1);
    CHECK(one.n == 1);
    CHECK_FALSE(one.phi.has_value());
    CHECK_FALSE(one.epsilon.has_value());
    CHECK_FALSE(one.zcap.has_value());
    const InvariantSet two = invariants_closed(2);
    CHECK(two.phi.has_value());
    CHECK(two.epsilon.has_value());
    CHECK(two.zcap.has_value());
}

TEST_CASE("scaled invariants approach their limits") {
    const InvariantRatios near = invariant_ratios(100);
    const InvariantRatios far = invariant_ratios(1000);
    const InvariantRatios limits = invariant_ratio_limits();

    CHECK(limits.tau_per_length ==
          Catch::Approx((9.0 - 2.0 * std::sqrt(3.0)) / 108.0).margin(1e-15));
    CHECK(limits.theta_per_genus_sq_length == Catch::Approx(2.0 / 9.0).margin(1e-15));

    const double got_far[] = {far.tau_per_length,          far.zcap_per_length,
                              far.phi_per_genus_length,    far.epsilon_per_genus_length,
                              far.lambda_per_genus_length, far.theta_per_genus_sq_length};
    const double got_near[] = {near.tau_per_length,          near.zcap_per_length,
                               near.phi_per_genus_length,    near.epsilon_per_genus_length,
                               near.lambda_per_genus_length, near.theta_per_genus_sq_length};
    const double want[] = {limits.tau_per_length,          limits.zcap_per_length,
                           limits.phi_per_genus_length,    limits.epsilon_per_genus_length,
                           limits.lambda_per_genus_length, limits.theta_per_genus_sq_length};
    for (int k = 0; k < 6; ++k) {
        const double err_far = std::abs(got_far[k] - want[k]);
        const double err_near = std::abs(got_near[k] - want[k]);
        REQUIRE(err_far <= 1e-2);
        REQUIRE(err_far <= err_near);
    }
}
