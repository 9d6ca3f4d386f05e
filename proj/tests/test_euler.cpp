#include <doctest.h>

#include "realgw/euler_class.hpp"
#include "realgw/graph_enum.hpp"

using realgw::Flag;
using realgw::GraphGeometry;
using realgw::HalfEdgeSign;
using realgw::HalfGraph;
using realgw::Involution;
using realgw::MultiPolynomial;
using realgw::ParityMode;
using realgw::Rational;
using realgw::RationalFunction;
using realgw::SignMode;
using realgw::SymbolicField;
using realgw::WeightSystem;

namespace {

const ParityMode kCanonical{HalfEdgeSign::canonical, Involution::tau};
const ParityMode kGeneralTau{HalfEdgeSign::general, Involution::tau};

MultiPolynomial C2(long c) { return MultiPolynomial::constant(2, Rational(c)); }

HalfGraph root_child_graph() {
    // root label 1 with half-edge degree 1, one child labeled 3 by a
    // degree-1 edge, one marked point on the child
    HalfGraph g;
    g.d0 = 1;
    g.root = 0;
    g.labels = {1, 3};
    g.edges = {{0, 1, 1}};
    g.marks = {{1, 1, 1}};
    return g;
}

}  // namespace

TEST_CASE("branch-point automorphism factor") {
    WeightSystem ws(2);
    SymbolicField f{ws};
    MultiPolynomial a = ws.lambda(1), b = ws.lambda(3);

    HalfGraph lone;  // root with one marked point: no valence-1 vertices
    lone.d0 = 1;
    lone.root = 0;
    lone.labels = {1};
    lone.marks = {{1, 0, 1}};
    CHECK(aut_moving(f, lone) == f.one());

    HalfGraph leaf = root_child_graph();
    leaf.marks.clear();  // unmarked child leaf has valence 1
    CHECK(aut_moving(f, leaf) == RationalFunction(b - a));

    leaf.edges[0].deg = 2;
    CHECK(aut_moving(f, leaf) == RationalFunction(b - a, C2(2)));
}

TEST_CASE("node smoothing") {
    WeightSystem ws(2);
    SymbolicField f{ws};
    MultiPolynomial a = ws.lambda(1), b = ws.lambda(3);

    HalfGraph g = root_child_graph();  // root joins two edges, child holds edge+mark
    auto ns = node_smoothing(f, g);
    CHECK(ns.scalar == RationalFunction(C2(2) * a + (a - b)));
    CHECK(ns.vertex_flags.empty());

    HalfGraph star;  // root with two marked points: one valence-3 vertex
    star.d0 = 1;
    star.root = 0;
    star.labels = {1};
    star.marks = {{1, 0, 1}, {2, 0, 1}};
    auto ns2 = node_smoothing(f, star);
    CHECK(ns2.scalar == f.one());
    REQUIRE(ns2.vertex_flags.size() == 1);
    CHECK(ns2.vertex_flags[0].first == 0);
    REQUIRE(ns2.vertex_flags[0].second.size() == 1);
    CHECK(ns2.vertex_flags[0].second[0] == RationalFunction(C2(2) * a));
}

TEST_CASE("edge bundle contribution") {
    WeightSystem ws2(2);
    SymbolicField f2{ws2};
    MultiPolynomial a = ws2.lambda(1), b = ws2.lambda(3);
    RationalFunction expected(C2(-4) * a * b * pow(a - b, 2) * pow(a + b, 2));
    CHECK(edge_contribution(f2, 1, 3, 1) == expected);

    WeightSystem ws1(1);
    SymbolicField f1{ws1};
    MultiPolynomial x = ws1.lambda(1);
    CHECK(edge_contribution(f1, 1, 2, 1) ==
          RationalFunction(MultiPolynomial::constant(1, Rational(-4)) * x * x));

    for (int de : {1, 2, 3})
        CHECK(edge_contribution(f2, 1, 4, de) == edge_contribution(f2, 4, 1, de));  // symmetry

    CHECK_THROWS_AS(edge_contribution(f2, 1, 1, 1), std::invalid_argument);
}

TEST_CASE("half-edge bundle contribution") {
    WeightSystem ws(2);
    SymbolicField f{ws};
    MultiPolynomial a = ws.lambda(1), b = ws.lambda(3);
    CHECK(half_edge_contribution(f, 1, 1, kCanonical) ==
          RationalFunction(C2(-2) * a * (b * b - a * a)));
    CHECK(half_edge_contribution(f, 1, 3, kCanonical) ==
          RationalFunction(C2(-2) * b * (a * a - b * b)));

    // conjugating every weight turns the factor at root i into the one at
    // its partner index
    for (int d0 : {1, 2, 3})
        for (int i = 1; i <= 4; ++i) {
            RationalFunction at_i = half_edge_contribution(f, d0, i, kCanonical);
            RationalFunction at_conj =
                half_edge_contribution(f, d0, WeightSystem::conj(i), kCanonical);
            CHECK(at_i.negate_generators() == at_conj);
        }

    // the general sign agrees with the canonical one whenever M is even
    for (int d0 : {1, 2, 3})
        for (Involution c : {Involution::tau, Involution::eta}) {
            ParityMode general{HalfEdgeSign::general, c};
            CHECK(half_edge_contribution(f, d0, 1, general) ==
                  half_edge_contribution(f, d0, 1, kCanonical));
        }

    WeightSystem ws1(1);
    SymbolicField f1{ws1};
    CHECK_THROWS_AS(half_edge_contribution(f1, 1, 1, kCanonical), std::invalid_argument);
    CHECK_NOTHROW(half_edge_contribution(f1, 1, 1, kGeneralTau));
}

TEST_CASE("map deformation") {
    WeightSystem ws(2);
    SymbolicField f{ws};
    MultiPolynomial a = ws.lambda(1), b = ws.lambda(3);

    HalfGraph lone;  // single root: vertex factor cancels against its one flag
    lone.d0 = 1;
    lone.root = 0;
    lone.labels = {1};
    CHECK(map_deformation(f, lone, kCanonical) ==
          half_edge_contribution(f, 1, 1, kCanonical));

    HalfGraph g = root_child_graph();
    RationalFunction expected = half_edge_contribution(f, 1, 1, kCanonical) *
                                edge_contribution(f, 1, 3, 1) /
                                RationalFunction(ws.vertex_euler(1));
    CHECK(map_deformation(f, g, kCanonical) == expected);
}

TEST_CASE("marked point factor") {
    WeightSystem ws(2);
    SymbolicField f{ws};
    MultiPolynomial a = ws.lambda(1);
    HalfGraph lone;
    lone.d0 = 1;
    lone.root = 0;
    lone.labels = {1};
    lone.marks = {{1, 0, 1}};
    CHECK(marked_factor(f, lone, {3}) == RationalFunction(a * a * a));
    lone.marks[0].sign = -1;
    CHECK(marked_factor(f, lone, {2}) == RationalFunction(-(a * a)));
    CHECK(marked_factor(f, lone, {3}) == RationalFunction(a * a * a));
    CHECK_THROWS_AS(marked_factor(f, lone, {1, 2}), std::invalid_argument);
}

TEST_CASE("two-vertex contribution against a longhand expansion") {
    WeightSystem ws(2);
    SymbolicField f{ws};
    MultiPolynomial a = ws.lambda(1), b = ws.lambda(3);
    HalfGraph g = root_child_graph();

    // Assembled by hand: marked b^3; no branch automorphisms; node factor
    // (3a - b); map deformation -4ab(a^2-b^2)^2; D = 1.
    MultiPolynomial num = -(b * b * b);
    MultiPolynomial den = C2(4) * a * b * (C2(3) * a - b) * pow(a * a - b * b, 2);
    RationalFunction by_hand(num, den);
    CHECK(locus_value(f, g, {3}, kCanonical) == by_hand);

    // specialized evaluation agrees with symbolic-then-evaluate
    realgw::WeightPoint p = realgw::sample_weight_point(2, 11);
    realgw::NumericField nf{ws, p};
    CHECK(locus_value(nf, g, {3}, kCanonical) ==
          locus_value(f, g, {3}, kCanonical).evaluate(p.values));
}

TEST_CASE("single-vertex contribution matches the degree-1 summand shape") {
    WeightSystem ws(2);
    SymbolicField f{ws};
    MultiPolynomial a = ws.lambda(1), b = ws.lambda(3);
    HalfGraph g;
    g.d0 = 1;
    g.root = 0;
    g.labels = {1};
    g.marks = {{1, 0, 1}, {2, 0, 1}};
    // lambda_1^{3+1} / (-2 lambda_1 (lambda_3^2 - lambda_1^2)) * (2 lambda_1)^{-1}
    RationalFunction expected(pow(a, 4),
                              C2(-2) * a * (b * b - a * a) * (C2(2) * a));
    CHECK(locus_value(f, g, {3, 1}, kCanonical) == expected);
}

TEST_CASE("dimension-violating insertions still evaluate") {
    WeightSystem ws(2);
    SymbolicField f{ws};
    HalfGraph g = root_child_graph();
    CHECK_NOTHROW(locus_value(f, g, {9}, kCanonical));
}

TEST_CASE("sign flips across all small graphs") {
    // flipping the sign of a marked point negates the contribution when its
    // insertion exponent is even and preserves it when odd
    WeightSystem ws(1);
    SymbolicField f{ws};
    for (int d : {1, 2, 3}) {
        auto graphs = realgw::half_graph_census(
            {1, d, 1, Involution::tau, Involution::tau, SignMode::plus_only});
        CHECK(!graphs.empty());
        for (const auto& g : graphs) {
            HalfGraph flipped = g;
            flipped.marks[0].sign = -1;
            for (int t : {2, 4}) {
                CHECK(locus_value(f, flipped, {t}, kGeneralTau) ==
                      -locus_value(f, g, {t}, kGeneralTau));
            }
            for (int t : {1, 3}) {
                CHECK(locus_value(f, flipped, {t}, kGeneralTau) ==
                      locus_value(f, g, {t}, kGeneralTau));
            }
        }
    }
}

TEST_CASE("specialized equals symbolic on all small graphs") {
    WeightSystem ws(1);
    SymbolicField sym{ws};
    realgw::WeightPoint p = realgw::sample_weight_point(1, 5);
    realgw::NumericField num{ws, p};
    for (int d : {1, 2, 3}) {
        for (Involution c : {Involution::tau, Involution::eta}) {
            auto graphs =
                realgw::half_graph_census({1, d, 1, Involution::tau, c, SignMode::all_signs});
            for (const auto& g : graphs) {
                ParityMode mode{HalfEdgeSign::general, c};
                CHECK(locus_value(num, g, {3}, mode) ==
                      locus_value(sym, g, {3}, mode).evaluate(p.values));
            }
        }
    }
}

TEST_CASE("edge-sign test hook flips the contribution") {
    WeightSystem ws(2);
    SymbolicField f{ws};
    RationalFunction normal = edge_contribution(f, 1, 3, 1);
    realgw::testhooks::flip_edge_sign = true;
    RationalFunction mutated = edge_contribution(f, 1, 3, 1);
    realgw::testhooks::flip_edge_sign = false;
    CHECK(mutated == -normal);
}

TEST_CASE("locus contribution wrapper") {
    WeightSystem ws(2);
    HalfGraph g = root_child_graph();
    realgw::WeightPoint p = realgw::sample_weight_point(2, 1);
    auto numeric = realgw::locus_contribution(g, {3}, ws, kCanonical, p);
    auto symbolic = realgw::locus_contribution(g, {3}, ws, kCanonical, std::nullopt);
    CHECK(std::get<Rational>(numeric.value) ==
          std::get<RationalFunction>(symbolic.value).evaluate(p.values));
}
