#pragma once

#include <array>
#include <map>

#include "realgw/rational_function.hpp"
#include "realgw/weight_point.hpp"

namespace realgw {

/// Torus weight algebra of P^{2M-1}. Fixed-point indices run over 1..2M with
/// the conjugation pairing 1<->2, 3<->4, ...; the free generators are the
/// weights of the odd indices, and lambda of an even index is minus its
/// partner's generator.
class WeightSystem {
public:
    explicit WeightSystem(int M);

    int M() const { return M_; }
    int point_count() const { return 2 * M_; }

    /// Conjugate index: i+1 for odd i, i-1 for even i.
    static int conj(int i) { return (i % 2 == 1) ? i + 1 : i - 1; }

    /// 0-based generator index backing lambda_i.
    int generator_of(int i) const;
    /// +1 for odd i, -1 for even i.
    int sign_of(int i) const;

    /// lambda_i as a degree-1 polynomial in the free generators.
    MultiPolynomial lambda(int i) const;
    /// lambda_i evaluated at a weight point.
    Rational lambda_at(const WeightPoint& p, int i) const;

    /// prod_{j != i} (lambda_i - lambda_j) over all 2M indices.
    MultiPolynomial vertex_euler(int i) const;
    Rational vertex_euler_at(const WeightPoint& p, int i) const;

    /// Display names "L1", "L3", ... for the free generators.
    std::vector<std::string> generator_names() const;

private:
    void check_index(int i) const;
    int M_;
};

/// Incidence of a vertex with an edge: the vertex's fixed-point label, the
/// far endpoint's label (the conjugate of the root label for the half-edge
/// flag), and the edge degree. Carries the tangent weight
/// (lambda_vertex - lambda_other) / degree.
struct Flag {
    int vertex_label;
    int other_label;
    int degree;
};

RationalFunction flag_weight(const WeightSystem& ws, const Flag& f);
Rational flag_weight_at(const WeightSystem& ws, const WeightPoint& p, const Flag& f);

/// Field of symbolic values: all arithmetic in rational functions of the
/// free generators.
struct SymbolicField {
    using Scalar = RationalFunction;
    const WeightSystem& ws;

    Scalar lambda(int i) const { return RationalFunction(ws.lambda(i)); }
    Scalar vertex_euler(int i) const { return RationalFunction(ws.vertex_euler(i)); }
    Scalar flag_w(const Flag& f) const { return flag_weight(ws, f); }
    Scalar from_rational(const Rational& c) const { return RationalFunction::constant(ws.M(), c); }
    Scalar one() const { return from_rational(Rational(1)); }
};

/// Reusable per-point caches for the factors shared across many graphs of
/// one localization sum. Purely an evaluation shortcut; values are identical
/// with or without it.
struct NumericMemo {
    std::map<int, Rational> vertex_euler;
    std::map<std::array<int, 3>, Rational> edge;        // (j1, j2, de)
    std::map<std::array<int, 3>, Rational> half_edge;   // (d0, i, sign key)
    std::map<std::array<int, 2>, Rational> lambda_pow;  // (label, exponent)
};

/// Field of specialized values: all arithmetic in exact rationals at a fixed
/// generic weight point. Division by zero throws ZeroDivide (resample).
struct NumericField {
    using Scalar = Rational;
    const WeightSystem& ws;
    const WeightPoint& point;
    NumericMemo* memo = nullptr;

    Scalar lambda(int i) const { return ws.lambda_at(point, i); }
    Scalar vertex_euler(int i) const {
        if (!memo) return ws.vertex_euler_at(point, i);
        auto it = memo->vertex_euler.find(i);
        if (it != memo->vertex_euler.end()) return it->second;
        Rational v = ws.vertex_euler_at(point, i);
        memo->vertex_euler.emplace(i, v);
        return v;
    }
    Scalar flag_w(const Flag& f) const { return flag_weight_at(ws, point, f); }
    Scalar from_rational(const Rational& c) const { return c; }
    Scalar one() const { return Rational(1); }
};

}  // namespace realgw
