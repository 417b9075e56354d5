#include "knotpoly/chebyshev.hpp"
#include "knotpoly/errors.hpp"
#include "knotpoly/render.hpp"
#include "oracles.hpp"

#include <doctest.h>

#include <cmath>
#include <thread>

using namespace knotpoly;
using knotpoly::testing::trig_T;
using knotpoly::testing::trig_V;

TEST_CASE("first-kind catalog") {
    CHECK(cheb_T(0) == Poly{2});
    CHECK(cheb_T(1) == Poly{0, 1});
    CHECK(cheb_T(2) == Poly{-2, 0, 1});
    CHECK(cheb_T(3) == Poly{0, -3, 0, 1});
    CHECK(cheb_T(4) == Poly{2, 0, -4, 0, 1});
    CHECK(cheb_T(5) == Poly{0, 5, 0, -5, 0, 1});
    CHECK(to_text(cheb_T(5)) == "x^5 - 5*x^3 + 5*x");
}

TEST_CASE("second-kind catalog") {
    CHECK(cheb_V(0) == Poly{1});
    CHECK(cheb_V(1) == Poly{0, 1});
    CHECK(cheb_V(2) == Poly{-1, 0, 1});
    CHECK(cheb_V(3) == Poly{0, -2, 0, 1});
    CHECK(cheb_V(4) == Poly{1, 0, -3, 0, 1});
    CHECK(cheb_V(5) == Poly{0, 3, 0, -4, 0, 1});
}

TEST_CASE("degree 12 against the trigonometric definitions") {
    const double theta = 0.3;
    const long double x = 2.0L * std::cos(static_cast<long double>(theta));
    CHECK(std::fabs(static_cast<double>(cheb_T(12).evaluate(x)) - trig_T(12, theta)) < 1e-9);
    CHECK(std::fabs(static_cast<double>(cheb_V(12).evaluate(x)) - trig_V(12, theta)) < 1e-9);
}

TEST_CASE("negative index is rejected by the generators") {
    CHECK_THROWS_AS(cheb_T(-1), invalid_input);
    CHECK_THROWS_AS(cheb_V(-3), invalid_input);
}

TEST_CASE("connection T_n = V_n - V_{n-2}") {
    CHECK(cheb_T(1) == cheb_V(1));
    for (long n = 2; n <= 60; ++n) CHECK(cheb_T(n) == cheb_V(n) - cheb_V(n - 2));
}

TEST_CASE("closed forms under x = t + 1/t") {
    const LaurentPoly x = x_variable();
    const LaurentPoly t_minus_inv = LaurentPoly::t_pow(1) - LaurentPoly::t_pow(-1);
    for (long n = 0; n <= 60; ++n) {
        const LaurentPoly tn = n == 0 ? LaurentPoly(2) : LaurentPoly::t_pow(n) + LaurentPoly::t_pow(-n);
        CHECK(compose(cheb_T(n), x) == tn);
        const LaurentPoly vn = exact_divide(LaurentPoly::t_pow(n + 1) - LaurentPoly::t_pow(-n - 1), t_minus_inv);
        CHECK(compose(cheb_V(n), x) == vn);
    }
}

TEST_CASE("monic with matching parity") {
    for (long n = 1; n <= 60; ++n) {
        for (const Poly& p : {cheb_T(n), cheb_V(n)}) {
            CHECK(p.degree() == n);
            CHECK(p.leading() == 1);
            for (long i = 0; i <= n; ++i) {
                if ((n - i) % 2 != 0) CHECK(p.coeff(static_cast<std::size_t>(i)) == 0);
            }
        }
    }
}

TEST_CASE("memo table is consistent across threads") {
    std::vector<Poly> seen(8);
    {
        std::vector<std::jthread> workers;
        for (std::size_t i = 0; i < seen.size(); ++i) {
            workers.emplace_back([&seen, i] { seen[i] = cheb_V(90 + static_cast<long>(i % 2)); });
        }
    }
    for (std::size_t i = 0; i < seen.size(); ++i) CHECK(seen[i] == cheb_V(90 + static_cast<long>(i % 2)));
}

TEST_CASE("expansion construction drops negative indices and merges") {
    const Expansion e = Expansion::make(Basis::ChebV, {{2, 1}, {-1, 5}, {0, 1}, {2, 1}, {0, -1}}, 3);
    REQUIRE(e.terms().size() == 1);
    CHECK(e.terms()[0].index == 2);
    CHECK(e.terms()[0].coef == 2);
    CHECK(e.constant() == 3);
}

TEST_CASE("expansion_eval") {
    CHECK(expansion_eval(Expansion::make(Basis::ChebV, {{1, 1}, {0, -1}})) == parse_laurent("t - 1 + t^-1"));
    CHECK(expansion_eval(Expansion::make(Basis::ChebT, {{0, 1}}, -1)) == LaurentPoly(1));
    CHECK(expansion_eval(Expansion{}).is_zero());
    CHECK(expansion_eval(Expansion::make(Basis::AlexanderK2, {{7, 1}, {3, -1}, {1, 1}})) ==
          parse_laurent("t^3 - t^2 + 1 - t^-2 + t^-3"));
    CHECK(expansion_eval(Expansion::make_q(1, {{5, 1}, {3, -1}}, 1, 3)) == parse_laurent("t - 1 + t^-1"));
}

TEST_CASE("basis names round-trip") {
    for (Basis b : {Basis::ChebT, Basis::ChebV, Basis::AlexanderK2, Basis::QNumber}) {
        CHECK(parse_basis(basis_name(b)) == b);
    }
    CHECK_THROWS_AS(parse_basis("W"), invalid_input);
}
