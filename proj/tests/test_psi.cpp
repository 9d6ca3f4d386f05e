#include <doctest.h>

#include <algorithm>

#include "realgw/psi.hpp"
#include "realgw/weights.hpp"

using realgw::MultiPolynomial;
using realgw::psi_integral;
using realgw::Rational;
using realgw::RationalFunction;

namespace {

// Independent oracle: genus-zero psi integrals via the string-equation
// recursion alone, with the three-point base case.
Rational psi_by_string_equation(std::vector<int> a) {
    const int n = static_cast<int>(a.size());
    long sum = 0;
    for (int x : a) sum += x;
    if (sum != n - 3) return Rational(0);
    if (n == 3) return Rational(1);
    // remove a zero-exponent point if one exists
    auto it = std::find(a.begin(), a.end(), 0);
    if (it != a.end()) {
        std::vector<int> rest;
        for (auto jt = a.begin(); jt != a.end(); ++jt)
            if (jt != it) rest.push_back(*jt);
        Rational total(0);
        for (std::size_t i = 0; i < rest.size(); ++i) {
            if (rest[i] == 0) continue;
            std::vector<int> dec = rest;
            --dec[i];
            total += psi_by_string_equation(dec);
        }
        return total;
    }
    // all exponents positive cannot happen with sum n-3 < n
    return Rational(0);
}

std::vector<std::vector<int>> exponent_vectors(int n, int total) {
    std::vector<std::vector<int>> out;
    std::vector<int> cur(n);
    auto rec = [&](auto&& self, int idx, int left) -> void {
        if (idx == n - 1) {
            cur[idx] = left;
            out.push_back(cur);
            return;
        }
        for (int v = 0; v <= left; ++v) {
            cur[idx] = v;
            self(self, idx + 1, left - v);
        }
    };
    rec(rec, 0, total);
    return out;
}

}  // namespace

TEST_CASE("psi integral base values") {
    CHECK(psi_integral({0, 0, 0}) == Rational(1));
    CHECK(psi_integral({1, 0, 0, 0}) == Rational(1));
    CHECK(psi_by_string_equation({1, 0, 0, 0}) == Rational(1));  // oracle agrees
    CHECK(psi_integral({2, 0, 0, 0}) == Rational(0));
    CHECK(psi_integral({1, 1, 0, 0, 0}) == Rational(2));
    CHECK(psi_integral({2, 0, 0, 0, 0}) == Rational(1));
    CHECK_THROWS_AS(psi_integral({0, 0}), std::invalid_argument);
}

TEST_CASE("psi integral agrees with the string-equation oracle") {
    for (int n = 3; n <= 7; ++n)
        for (const auto& a : exponent_vectors(n, n - 3))
            CHECK(psi_integral(a) == psi_by_string_equation(a));
}

TEST_CASE("symmetry under permutations") {
    std::vector<int> a{2, 1, 0, 0, 0, 1, 0};  // n = 7, sum = 4 = n - 3
    Rational base = psi_integral(a);
    std::sort(a.begin(), a.end());
    do {
        CHECK(psi_integral(a) == base);
    } while (std::next_permutation(a.begin(), a.end()));
}

TEST_CASE("multinomial total") {
    for (int n = 3; n <= 8; ++n) {
        Rational total(0);
        for (const auto& a : exponent_vectors(n, n - 3)) total += psi_integral(a);
        // sum of multinomial(n-3; a) over all compositions = n^(n-3)
        CHECK(total == pow(Rational(n), static_cast<unsigned>(n - 3)));
    }
}

TEST_CASE("string equation") {
    for (int n = 3; n <= 7; ++n) {
        for (const auto& a : exponent_vectors(n, n - 2)) {
            std::vector<int> appended = a;
            appended.push_back(0);
            Rational lhs = psi_integral(appended);
            Rational rhs(0);
            for (int i = 0; i < n; ++i) {
                if (a[i] == 0) continue;
                std::vector<int> dec = a;
                --dec[i];
                rhs += psi_integral(dec);
            }
            CHECK(lhs == rhs);
        }
    }
}

TEST_CASE("vertex integral special shapes") {
    // one edge flag of weight w on an (l+1)-valent vertex integrates to w^-(l-1)
    realgw::WeightSystem ws(1);
    realgw::SymbolicField f{ws};
    RationalFunction w(MultiPolynomial::variable(1, 0));
    for (int l = 2; l <= 5; ++l) {
        RationalFunction got = realgw::vertex_integral(f, {w}, l + 1);
        RationalFunction want = RationalFunction::constant(1, Rational(1)) /
                                pow(w, static_cast<unsigned>(l - 1));
        CHECK(got == want);
    }

    realgw::WeightSystem ws4(4);
    realgw::SymbolicField f4{ws4};
    std::vector<RationalFunction> w4;
    for (int i = 0; i < 4; ++i) w4.push_back(RationalFunction(MultiPolynomial::variable(4, i)));

    // valence 3, three flags: 1/(w1 w2 w3)
    RationalFunction got3 = realgw::vertex_integral(f4, {w4[0], w4[1], w4[2]}, 3);
    CHECK(got3 == f4.one() / (w4[0] * w4[1] * w4[2]));

    // valence 4, four flags: (sum 1/w) / prod w
    RationalFunction got4 = realgw::vertex_integral(f4, w4, 4);
    RationalFunction inv_sum = RationalFunction::constant(4, Rational(0));
    RationalFunction prod = f4.one();
    for (const auto& w_i : w4) {
        inv_sum += f4.one() / w_i;
        prod = prod * w_i;
    }
    CHECK(got4 == inv_sum / prod);
}

TEST_CASE("vertex integral equals the closed form without marked points") {
    for (int val = 3; val <= 6; ++val) {
        realgw::WeightSystem ws(val);
        realgw::SymbolicField f{ws};
        std::vector<RationalFunction> flags;
        for (int i = 0; i < val; ++i) flags.push_back(RationalFunction(MultiPolynomial::variable(val, i)));
        RationalFunction expansion = realgw::vertex_integral(f, flags, val);
        RationalFunction inv_sum = RationalFunction::constant(val, Rational(0));
        RationalFunction prod = f.one();
        for (const auto& w_i : flags) {
            inv_sum += f.one() / w_i;
            prod = prod * w_i;
        }
        CHECK(expansion == pow(inv_sum, static_cast<unsigned>(val - 3)) / prod);
    }
}

TEST_CASE("zero flag weight is rejected") {
    realgw::WeightSystem ws(1);
    realgw::SymbolicField f{ws};
    RationalFunction zero(1);  // the zero function in one generator
    CHECK_THROWS_AS(realgw::vertex_integral(f, {zero}, 3), std::invalid_argument);
}
