#pragma once

#include <string>
#include <vector>

#include "realgw/weights.hpp"

namespace realgw {

/// Domain involution selector. |tau| = 0, |eta| = 1.
enum class Involution { tau, eta };

inline int involution_parity(Involution v) { return v == Involution::eta ? 1 : 0; }
std::string involution_name(Involution v);
Involution involution_from_name(const std::string& s);

/// Decorated rooted tree indexing one torus-fixed locus: the root carries the
/// half-edge of degree d0 toward the conjugate copy, every vertex carries a
/// fixed-point label, every edge a covering degree, and each marked point
/// sits at a vertex with a sign. Total degree of the doubled map:
/// d0 + 2 * sum of edge degrees.
struct HalfGraph {
    struct Edge {
        int a, b;   // vertex ids, a = parent side
        int deg;    // d_e >= 1
    };
    struct Mark {
        int index;   // 1..l, distinguishable
        int vertex;  // vertex id
        int sign;    // +1 or -1
    };

    int d0 = 1;
    int root = 0;
    std::vector<int> labels;  // vertex id -> fixed-point label in 1..2M
    std::vector<Edge> edges;
    std::vector<Mark> marks;

    int vertex_count() const { return static_cast<int>(labels.size()); }
    int total_degree() const;
    int root_label() const { return labels[root]; }

    /// Edge flags at each vertex; the half-edge flag (far label = conjugate
    /// of the root label) is listed first for the root.
    std::vector<std::vector<Flag>> edge_flags_per_vertex() const;
    /// Valence per vertex: edge flags (half-edge included) + marked points.
    std::vector<int> valences() const;
    std::vector<std::vector<Mark>> marks_per_vertex() const;
};

/// Canonical string key of the decorated rooted tree; equal keys iff the
/// graphs are isomorphic by a root-fixing decoration-preserving map.
std::string canonical_key(const HalfGraph& g);

/// Rewrites the graph with vertices renumbered in canonical preorder
/// (children sorted by canonical key), so equal-keyed graphs become
/// structurally identical.
HalfGraph canonicalize(const HalfGraph& g);

/// Order of the group of root-fixing tree automorphisms preserving labels,
/// edge degrees and the marked-point assignment. Marked points are
/// distinguishable, so any subtree carrying one is rigid.
long automorphism_order(const HalfGraph& g);

/// |Aut| * d0 * prod of ordinary edge degrees.
long combinatorial_denominator(const HalfGraph& g);

}  // namespace realgw
