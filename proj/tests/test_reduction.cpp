// SPDX-License-Identifier: Apache-2.0
#include <catch2/catch_amalgamated.hpp>

#include <random>
#include <stdexcept>

#include "ladder/closed_forms.hpp"
#include "ladder/reduction.hpp"

using namespace ladder;

TEST_CASE("series and parallel composition") {
    CHECK(series(make_rational(1, 2), make_rational(1, 3)) == make_rational(5, 6));
    CHECK(parallel(Rational(1), Rational(1)) == make_rational(1, 2));
    CHECK(parallel(Rational(2), Rational(3)) == make_rational(6, 5));
    CHECK(parallel(Rational(0), Rational(5)) == 0);
    CHECK_THROWS_AS(series(Rational(-1), Rational(1)), std::domain_error);
    CHECK_THROWS_AS(parallel(Rational(1), Rational(-1)), std::domain_error);
    CHECK_THROWS_AS(parallel(Rational(0), Rational(0)), DivisionByZero);
}

TEST_CASE("star_from_triangle solves the half-sum system") {
    const StarArms arms =
        star_from_triangle(make_rational(3, 4), Rational(1), make_rational(3, 4));
    CHECK(arms.arm_1 == make_rational(1, 2));
    CHECK(arms.arm_2 == make_rational(1, 4));
    CHECK(arms.arm_3 == make_rational(1, 2));

    CHECK_THROWS_AS(star_from_triangle(Rational(1), Rational(1), Rational(3)),
                    NonRealizableStar);
    CHECK_THROWS_AS(star_from_triangle(Rational(-1), Rational(1), Rational(1)),
                    std::domain_error);
}

TEST_CASE("star arms round-trip through their triangle") {
    std::mt19937 rng(17);
    std::uniform_int_distribution<int> num(0, 40);
    std::uniform_int_distribution<int> den(1, 20);
    for (int trial = 0; trial < 1000; ++trial) {
        const Rational a = make_rational(num(rng), den(rng));
        const Rational b = make_rational(num(rng), den(rng));
        const Rational c = make_rational(num(rng), den(rng));
        const StarArms arms = star_from_triangle(a + b, a + c, b + c);
        REQUIRE(arms.arm_1 == a);
        REQUIRE(arms.arm_2 == b);
        REQUIRE(arms.arm_3 == c);
        REQUIRE(arms.arm_1 + arms.arm_2 == a + b);
        REQUIRE(arms.arm_1 + arms.arm_3 == a + c);
        REQUIRE(arms.arm_2 + arms.arm_3 == b + c);
    }
}

TEST_CASE("grown end rung matches the closed form") {
    CHECK(last_rung_by_recurrence(1) == 1);
    CHECK(last_rung_by_recurrence(2) == make_rational(3, 4));
    CHECK(last_rung_by_recurrence(3) == make_rational(11, 15));
    for (int n = 1; n <= 60; ++n) {
        REQUIRE(last_rung_by_recurrence(n) == last_rung_resistance(n));
    }
    CHECK_THROWS_AS(last_rung_by_recurrence(0), std::domain_error);
}

TEST_CASE("grown corner spans match the closed forms") {
    for (int n = 1; n <= 60; ++n) {
        const auto [x, y] = spans_by_recurrence(n);
        REQUIRE(x == rail_span_resistance(n));
        REQUIRE(y == diagonal_span_resistance(n));
    }
}

TEST_CASE("the span gap telescopes") {
    for (int n = 1; n <= 60; ++n) {
        REQUIRE(span_difference_by_product(n) == span_difference(n));
    }
    // each added column divides the gap by z_n + 3, using reduction values only
    for (int n = 1; n <= 60; ++n) {
        REQUIRE(span_difference_by_product(n + 1) * (last_rung_by_recurrence(n) + 3) ==
                span_difference_by_product(n));
    }
}

TEST_CASE("continued fraction convergents hit the end rung") {
    CHECK(last_rung_by_continued_fraction(1) == 1);
    CHECK(last_rung_by_continued_fraction(2) == make_rational(3, 4));
    CHECK(last_rung_by_continued_fraction(3) == make_rational(11, 15));
    for (int n = 1; n <= 40; ++n) {
        REQUIRE(last_rung_by_continued_fraction(n) == last_rung_resistance(n));
    }
}

TEST_CASE("corner-to-column reduction on small ladders") {
    const CornerColumnTriple two_one = corner_column_by_reduction(2, 1);
    CHECK(two_one.to_rail == make_rational(3, 4));
    CHECK(two_one.to_cross == 1);
    CHECK(two_one.rung == make_rational(3, 4));

    const CornerColumnTriple three_two = corner_column_by_reduction(3, 2);
    CHECK(three_two.to_rail == make_rational(11, 15));
    CHECK(three_two.to_cross == make_rational(14, 15));
    CHECK(three_two.rung == make_rational(3, 5));

    const CornerColumnTriple diag = corner_column_by_reduction(5, 5);
    CHECK(diag.to_rail == 0);
    CHECK(diag.to_cross == last_rung_by_recurrence(5));
    CHECK(diag.rung == last_rung_by_recurrence(5));

    CHECK_THROWS_AS(corner_column_by_reduction(3, 0), std::domain_error);
    CHECK_THROWS_AS(corner_column_by_reduction(3, 4), std::domain_error);
}

TEST_CASE("pairwise reduction on small ladders") {
    const auto [rail_11, cross_11] = pair_by_reduction(2, 1, 1);
    CHECK(rail_11 == 0);
    CHECK(cross_11 == make_rational(3, 4));

    const auto [rail_21, cross_21] = pair_by_reduction(3, 2, 1);
    CHECK(rail_21 == make_rational(11, 15));
    CHECK(cross_21 == make_rational(14, 15));

    CHECK_THROWS_AS(pair_by_reduction(3, 1, 2), std::domain_error);
}

TEST_CASE("reduction reproduces every closed-form pair value") {
    for (int n = 1; n <= 15; ++n) {
        for (int i = 1; i <= n; ++i) {
            const auto triple = corner_column_by_reduction(n, i);
            REQUIRE(triple.to_rail == rail_resistance(n, n, i));
            REQUIRE(triple.to_cross == cross_resistance(n, n, i));
            REQUIRE(triple.rung == rung_resistance(n, i));
            for (int j = 1; j <= i; ++j) {
                const auto [rail, cross] = pair_by_reduction(n, i, j);
                REQUIRE(rail == rail_resistance(n, i, j));
                REQUIRE(cross == cross_resistance(n, i, j));
            }
        }
    }
}

TEST_CASE("full dispatch through reductions matches the closed dispatch") {
    for (int n = 1; n <= 12; ++n) {
        const LadderSpec spec(n);
        const auto verts = spec.vertices();
        for (std::size_t i = 0; i < verts.size(); ++i) {
            for (std::size_t j = i; j < verts.size(); ++j) {
                REQUIRE(resistance_by_reduction(spec, verts[i], verts[j]) ==
                        resistance(spec, verts[i], verts[j]));
            }
        }
    }
}
