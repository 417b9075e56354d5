#include "knotpoly/chebyshev.hpp"
#include "knotpoly/errors.hpp"
#include "knotpoly/qcalc.hpp"
#include "knotpoly/render.hpp"
#include "oracles.hpp"

#include <doctest.h>

using namespace knotpoly;
using knotpoly::testing::geometric_q_number;
using knotpoly::testing::to_small;

TEST_CASE("small q-numbers") {
    const QBase half(1);
    CHECK(q_number(0, half).is_zero());
    CHECK(q_number(1, half) == LaurentPoly(1));
    CHECK(q_number(1, QBase(7)) == LaurentPoly(1));
    CHECK(q_number(3, half) == parse_laurent("t + 1 + t^-1"));
    CHECK(q_number(4, half) == parse_laurent("t^(3/2) + t^(1/2) + t^(-1/2) + t^(-3/2)"));
    CHECK_THROWS_AS(q_number(-1, half), invalid_input);
}

TEST_CASE("q-numbers match the geometric series") {
    for (long s = 1; s <= 5; ++s) {
        for (long n = 0; n <= 40; ++n) CHECK(to_small(q_number(n, QBase(s))) == geometric_q_number(n, s));
    }
}

TEST_CASE("q-number as a quotient") {
    const QBase base(3);
    const LaurentPoly q = LaurentPoly::t_half_pow(3);
    const LaurentPoly qi = LaurentPoly::t_half_pow(-3);
    for (long n = 1; n <= 15; ++n) {
        const LaurentPoly num = LaurentPoly::t_half_pow(3 * n) - LaurentPoly::t_half_pow(-3 * n);
        CHECK(q_number(n, base) * (q - qi) == num);
    }
}

TEST_CASE("invalid base") {
    CHECK_THROWS_AS(QBase(0), invalid_base);
    CHECK_THROWS_AS(QBase(-2), invalid_base);
    CHECK(QBase(2).q_plus_inverse() == x_variable());
    CHECK(QBase(1).q_plus_inverse() == y_variable());
}

TEST_CASE("fractional brackets") {
    const QBase b3(3);
    const QBase half(1);
    CHECK(q_bracket_ratio(3, 3, b3).finalize() == LaurentPoly(1));
    const RationalLaurent five = q_bracket_ratio(5, 3, b3);
    CHECK(five.num() == q_number(5, half));
    CHECK(five.den() == q_number(3, half));
    const RationalLaurent third = q_bracket_ratio(1, 3, b3);
    CHECK(third.num() == LaurentPoly(1));
    CHECK(third.den() == q_number(3, half));
    CHECK(q_bracket_ratio(4, 1, b3).finalize() == q_number(4, b3));
    CHECK_THROWS_AS(q_bracket_ratio(5, 2, b3), invalid_base);
    CHECK_THROWS_AS(q_bracket_ratio(5, 3, QBase(1)), invalid_base);
}

TEST_CASE("classical limit") {
    for (long s = 1; s <= 4; ++s) {
        for (long n = 0; n <= 100; ++n) CHECK(q_number(n, QBase(s)).coefficient_sum() == n);
    }
}

TEST_CASE("palindromic") {
    for (long s = 1; s <= 4; ++s) {
        for (long n = 0; n <= 50; ++n) CHECK(is_palindromic(q_number(n, QBase(s))));
    }
}

TEST_CASE("bridge to the second kind") {
    for (long s = 1; s <= 4; ++s) {
        const QBase base(s);
        const LaurentPoly arg = base.q_plus_inverse();
        for (long n = 0; n <= 60; ++n) CHECK(compose(cheb_V(n), arg) == q_number(n + 1, base));
    }
}

TEST_CASE("[nl]_q = [n]_{q^l} [l]_q") {
    const QBase half(1);
    for (long n = 1; n <= 20; ++n) {
        for (long l = 1; l <= 20; ++l) CHECK(q_number(n * l, half) == q_number(n, QBase(l)) * q_number(l, half));
    }
}
