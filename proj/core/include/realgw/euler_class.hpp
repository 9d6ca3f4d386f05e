#pragma once

#include <atomic>
#include <optional>
#include <variant>

#include "realgw/half_graph.hpp"
#include "realgw/psi.hpp"

namespace realgw {

namespace testhooks {
/// Deliberately flips the sign of every ordinary-edge bundle contribution.
/// Exists so the verification suite's sensitivity can be demonstrated; never
/// set outside tests.
extern std::atomic<bool> flip_edge_sign;
}  // namespace testhooks

/// Sign convention for the half-edge bundle contribution.
///  - canonical: the P^{4m-1} formula (requires an even number of weight
///    generators); leading sign (-1)^{d0}.
///  - general: the variant valid for either parity of the generator count,
///    with leading sign (-1)^{(M-1) d0 + M |c| conj(i)} depending on the
///    domain-involution class c of the locus.
enum class HalfEdgeSign { canonical, general };

struct ParityMode {
    HalfEdgeSign sign = HalfEdgeSign::canonical;
    Involution c = Involution::tau;  // used by the general sign only
};

/// Incidence data shared by the contribution factors; computed once per
/// contribution.
struct GraphGeometry {
    std::vector<std::vector<Flag>> flags;
    std::vector<int> valences;

    static GraphGeometry of(const HalfGraph& g) {
        return GraphGeometry{g.edge_flags_per_vertex(), g.valences()};
    }
};

/// Product over valence-1 vertices (other than a bare root) of the tangent
/// weight of the unique incident edge: the moving infinitesimal
/// automorphisms that slide branch points. Empty product = 1.
template <class F>
typename F::Scalar aut_moving(const F& f, const HalfGraph& g, const GraphGeometry& geom) {
    typename F::Scalar prod = f.one();
    for (int v = 0; v < g.vertex_count(); ++v) {
        if (geom.valences[v] != 1) continue;
        if (v == g.root) continue;  // residual S^1 absorbed into the half-edge factor
        prod = prod * f.flag_w(geom.flags[v][0]);
    }
    return prod;
}

template <class F>
typename F::Scalar aut_moving(const F& f, const HalfGraph& g) {
    return aut_moving(f, g, GraphGeometry::of(g));
}

template <class F>
struct NodeSmoothing {
    typename F::Scalar scalar;                                    // valence-2 node factors
    std::vector<std::pair<int, std::vector<typename F::Scalar>>> vertex_flags;  // valence>=3: (vertex, edge flag weights)
};

/// Deformations of the domain: each valence-2 vertex joining two edges
/// contributes w1 + w2; each valence>=3 vertex defers its (w - psi) flag
/// factors to the vertex integral. A valence-2 vertex holding one edge and
/// one marked point sits on a non-contracted component and contributes
/// nothing.
template <class F>
NodeSmoothing<F> node_smoothing(const F& f, const HalfGraph& g, const GraphGeometry& geom) {
    NodeSmoothing<F> out{f.one(), {}};
    for (int v = 0; v < g.vertex_count(); ++v) {
        const auto& fl = geom.flags[v];
        if (geom.valences[v] == 2 && fl.size() == 2) {
            out.scalar = out.scalar * (f.flag_w(fl[0]) + f.flag_w(fl[1]));
        } else if (geom.valences[v] >= 3) {
            std::vector<typename F::Scalar> ws;
            ws.reserve(fl.size());
            for (const Flag& flag : fl) ws.push_back(f.flag_w(flag));
            out.vertex_flags.push_back({v, std::move(ws)});
        }
    }
    return out;
}

template <class F>
NodeSmoothing<F> node_smoothing(const F& f, const HalfGraph& g) {
    return node_smoothing(f, g, GraphGeometry::of(g));
}

/// Euler class of the pulled-back tangent sections over an ordinary edge
/// covering the line between fixed points j1 and j2 with degree de:
///   (-1)^de (de!)^2 / de^{2 de} * (l_{j1} - l_{j2})^{2 de}
///   * prod_{r=0..de} prod_{k != j1, j2} ((r l_{j1} + (de - r) l_{j2})/de - l_k).
template <class F>
typename F::Scalar edge_contribution(const F& f, int j1, int j2, int de) {
    if (j1 == j2) throw std::invalid_argument("edge endpoints must have distinct labels");
    if (de < 1) throw std::invalid_argument("edge degree must be positive");
    if constexpr (requires { f.memo; }) {
        if (f.memo) {
            auto it = f.memo->edge.find({j1, j2, de});
            if (it != f.memo->edge.end()) return it->second;
        }
    }
    const int n = f.ws.point_count();
    Rational de_r(de);
    Rational front = factorial(static_cast<unsigned>(de)) * factorial(static_cast<unsigned>(de)) /
                     pow(de_r, static_cast<unsigned>(2 * de));
    if (de % 2 == 1) front = -front;
    if (testhooks::flip_edge_sign.load(std::memory_order_relaxed)) front = -front;
    typename F::Scalar l1 = f.lambda(j1), l2 = f.lambda(j2);
    typename F::Scalar result = f.from_rational(front) * pow(l1 - l2, static_cast<unsigned>(2 * de));
    for (int r = 0; r <= de; ++r) {
        typename F::Scalar base =
            l1 * f.from_rational(Rational(r, de)) + l2 * f.from_rational(Rational(de - r, de));
        for (int k = 1; k <= n; ++k) {
            if (k == j1 || k == j2) continue;
            result = result * (base - f.lambda(k));
        }
    }
    if constexpr (requires { f.memo; }) {
        if (f.memo) f.memo->edge.emplace(std::array<int, 3>{j1, j2, de}, result);
    }
    return result;
}

/// Euler class of the real tangent sections over the half-edge: the degree-d0
/// cover of the conjugation-invariant line through P_i. Canonical sign
/// requires an even generator count; the general sign covers both parities.
template <class F>
typename F::Scalar half_edge_contribution(const F& f, int d0, int i, const ParityMode& mode) {
    if (d0 < 1) throw std::invalid_argument("half-edge degree must be positive");
    const int M = f.ws.M();
    const int n = 2 * M;
    if (i < 1 || i > n) throw std::out_of_range("root label out of range");
    long sign_exp;
    if (mode.sign == HalfEdgeSign::canonical) {
        if (M % 2 != 0)
            throw std::invalid_argument(
                "canonical half-edge sign needs an even generator count; use the general mode");
        sign_exp = d0;
    } else {
        sign_exp = static_cast<long>(M - 1) * d0 +
                   static_cast<long>(M) * involution_parity(mode.c) * WeightSystem::conj(i);
    }
    const int sign_key = static_cast<int>(sign_exp % 2);
    if constexpr (requires { f.memo; }) {
        if (f.memo) {
            auto it = f.memo->half_edge.find({d0, i, sign_key});
            if (it != f.memo->half_edge.end()) return it->second;
        }
    }
    Rational front = factorial(static_cast<unsigned>(d0));
    if (sign_exp % 2 != 0) front = -front;
    typename F::Scalar li = f.lambda(i);
    typename F::Scalar result =
        f.from_rational(front) *
        pow(li * f.from_rational(Rational(2, d0)), static_cast<unsigned>(d0));
    for (int j = 1; j <= n; ++j) {
        if (j == i || (j - i) % 2 != 0) continue;  // same-parity indices only
        for (int r = 0; r <= d0; ++r) {
            result = result * (li * f.from_rational(Rational(d0 - 2 * r, d0)) - f.lambda(j));
        }
    }
    if constexpr (requires { f.memo; }) {
        if (f.memo) f.memo->half_edge.emplace(std::array<int, 3>{d0, i, sign_key}, result);
    }
    return result;
}

template <class F>
typename F::Scalar pow_scalar(const F& f, const typename F::Scalar& base, int e) {
    typename F::Scalar r = f.one();
    for (int k = 0; k < e; ++k) r = r * base;
    return r;
}

/// Euler class of the moving deformations of the map: vertex factors, the
/// half-edge and ordinary-edge section bundles, divided by one vertex factor
/// per flag (half-edge flag included).
template <class F>
typename F::Scalar map_deformation(const F& f, const HalfGraph& g, const ParityMode& mode,
                                   const GraphGeometry& geom) {
    typename F::Scalar num = half_edge_contribution(f, g.d0, g.root_label(), mode);
    for (const auto& e : g.edges) num = num * edge_contribution(f, g.labels[e.a], g.labels[e.b], e.deg);
    typename F::Scalar den = f.one();
    for (int v = 0; v < g.vertex_count(); ++v) {
        const int extra = static_cast<int>(geom.flags[v].size()) - 1;  // one net vertex factor cancels
        if (extra <= 0) continue;
        den = den * pow_scalar(f, f.vertex_euler(g.labels[v]), extra);
    }
    return num / den;
}

template <class F>
typename F::Scalar map_deformation(const F& f, const HalfGraph& g, const ParityMode& mode) {
    return map_deformation(f, g, mode, GraphGeometry::of(g));
}

/// The evaluation-class factor: prod_k s_k^{t_k + 1} * lambda at the marked
/// vertex to the power t_k.
template <class F>
typename F::Scalar marked_factor(const F& f, const HalfGraph& g, const std::vector<int>& t) {
    if (t.size() != g.marks.size()) throw std::invalid_argument("insertion vector length mismatch");
    typename F::Scalar prod = f.one();
    for (const auto& m : g.marks) {
        if (m.index < 1 || m.index > static_cast<int>(t.size()))
            throw std::invalid_argument("marked-point index out of range");
        const int tk = t[m.index - 1];
        const int label = g.labels[m.vertex];
        typename F::Scalar factor = f.one();
        bool cached = false;
        if constexpr (requires { f.memo; }) {
            if (f.memo) {
                auto it = f.memo->lambda_pow.find({label, tk});
                if (it != f.memo->lambda_pow.end()) {
                    factor = it->second;
                    cached = true;
                }
            }
        }
        if (!cached) {
            factor = pow_scalar(f, f.lambda(label), tk);
            if constexpr (requires { f.memo; }) {
                if (f.memo) f.memo->lambda_pow.emplace(std::array<int, 2>{label, tk}, factor);
            }
        }
        if (m.sign < 0 && (tk + 1) % 2 != 0) factor = -factor;
        prod = prod * factor;
    }
    return prod;
}

/// Full contribution of one half-graph to the localization sum:
///   (1/D) * marked * aut_moving * prod of vertex integrals
///   / (node smoothing scalar * map deformation).
/// `denominator` may pass a precomputed combinatorial denominator; -1
/// computes it.
template <class F>
typename F::Scalar locus_value(const F& f, const HalfGraph& g, const std::vector<int>& t,
                               const ParityMode& mode, long denominator = -1) {
    GraphGeometry geom = GraphGeometry::of(g);
    if (denominator < 0) denominator = combinatorial_denominator(g);
    typename F::Scalar num = marked_factor(f, g, t) * aut_moving(f, g, geom);
    NodeSmoothing<F> ns = node_smoothing(f, g, geom);
    for (const auto& [v, ws] : ns.vertex_flags) num = num * vertex_integral(f, ws, geom.valences[v]);
    typename F::Scalar den = f.from_rational(Rational(denominator)) * ns.scalar *
                             map_deformation(f, g, mode, geom);
    return num / den;
}

/// The exact value one half-graph contributes, in whichever arithmetic the
/// caller requested.
struct LocusContribution {
    HalfGraph graph;
    std::variant<Rational, RationalFunction> value;
};

LocusContribution locus_contribution(const HalfGraph& g, const std::vector<int>& t,
                                     const WeightSystem& ws, const ParityMode& mode,
                                     const std::optional<WeightPoint>& point);

}  // namespace realgw
