#include <doctest.h>

#include "realgw/weights.hpp"

using realgw::Flag;
using realgw::MultiPolynomial;
using realgw::Rational;
using realgw::RationalFunction;
using realgw::WeightPoint;
using realgw::WeightSystem;

TEST_CASE("weight point sampling") {
    WeightPoint p = realgw::sample_weight_point(2, 0);
    CHECK(p.size() == 2);
    CHECK(realgw::weight_point_is_generic(p));
    CHECK(realgw::sample_weight_point(2, 0).values == p.values);  // deterministic
    CHECK(realgw::sample_weight_point(2, 1).values != p.values);
    WeightPoint single = realgw::sample_weight_point(1, 42);
    CHECK(single.size() == 1);
    CHECK(!single.values[0].is_zero());
    for (long seed = 0; seed < 50; ++seed)
        CHECK(realgw::weight_point_is_generic(realgw::sample_weight_point(7, seed)));
    CHECK(!realgw::weight_point_is_generic(WeightPoint{{Rational(1), Rational(-1)}}));
    CHECK(!realgw::weight_point_is_generic(WeightPoint{{Rational(0)}}));
}

TEST_CASE("lambda and conjugation") {
    WeightSystem ws(2);
    CHECK(ws.lambda(1) == MultiPolynomial::variable(2, 0));
    CHECK(ws.lambda(2) == -MultiPolynomial::variable(2, 0));
    CHECK(ws.lambda(3) == MultiPolynomial::variable(2, 1));
    CHECK(ws.lambda(4) == -MultiPolynomial::variable(2, 1));
    CHECK_THROWS_AS(ws.lambda(5), std::out_of_range);
    CHECK_THROWS_AS(ws.lambda(0), std::out_of_range);
    for (int i = 1; i <= 4; ++i) {
        CHECK((ws.lambda(i) + ws.lambda(WeightSystem::conj(i))).is_zero());
    }
    WeightPoint p = realgw::sample_weight_point(2, 3);
    for (int i = 1; i <= 4; ++i)
        CHECK(ws.lambda_at(p, i) == ws.lambda(i).evaluate(p.values));
}

TEST_CASE("flag weights") {
    WeightSystem ws(2);
    MultiPolynomial l1 = ws.lambda(1), l3 = ws.lambda(3);
    CHECK(flag_weight(ws, Flag{1, 3, 2}) ==
          RationalFunction(l1 - l3, MultiPolynomial::constant(2, Rational(2))));
    // half-edge flag at a root labeled 1: (l1 - l2)/d0 = 2 l1 / d0
    CHECK(flag_weight(ws, Flag{1, 2, 3}) ==
          RationalFunction(MultiPolynomial::constant(2, Rational(2)) * l1,
                           MultiPolynomial::constant(2, Rational(3))));
    CHECK(flag_weight(ws, Flag{3, 4, 1}) ==
          RationalFunction(MultiPolynomial::constant(2, Rational(2)) * l3));
    CHECK_THROWS_AS(flag_weight(ws, Flag{1, 1, 1}), std::invalid_argument);

    // invariance under endpoint swap composed with global conjugation
    RationalFunction w = flag_weight(ws, Flag{1, 2, 5});
    RationalFunction swapped = flag_weight(ws, Flag{2, 1, 5});
    CHECK(swapped.negate_generators() == w);
}

TEST_CASE("vertex Euler factors") {
    WeightSystem ws1(1);
    CHECK(ws1.vertex_euler(1) == MultiPolynomial::constant(1, Rational(2)) *
                                     MultiPolynomial::variable(1, 0));

    WeightSystem ws(2);
    MultiPolynomial l1 = ws.lambda(1), l3 = ws.lambda(3);
    MultiPolynomial expected =
        MultiPolynomial::constant(2, Rational(2)) * l1 * (l1 - l3) * (l1 + l3);
    CHECK(ws.vertex_euler(1) == expected);

    WeightPoint p = realgw::sample_weight_point(2, 9);
    for (int i = 1; i <= 4; ++i) {
        CHECK(!ws.vertex_euler_at(p, i).is_zero());
        CHECK(ws.vertex_euler_at(p, i) == ws.vertex_euler(i).evaluate(p.values));
    }
}

TEST_CASE("vertex Euler conjugation identities") {
    for (int M = 1; M <= 3; ++M) {
        WeightSystem ws(M);
        int sign = (2 * M - 1) % 2 == 0 ? 1 : -1;  // (-1)^(2M-1) = -1 always
        for (int i = 1; i <= 2 * M; ++i) {
            int ibar = WeightSystem::conj(i);
            MultiPolynomial conj_sub = ws.vertex_euler(i).negate_generators();
            CHECK(conj_sub == ws.vertex_euler(ibar));
            MultiPolynomial scaled = ws.vertex_euler(i) * Rational(sign);
            CHECK(ws.vertex_euler(ibar) == scaled);
        }
    }
}
