#include "realgw/half_graph.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace realgw {

std::string involution_name(Involution v) { return v == Involution::tau ? "tau" : "eta"; }

Involution involution_from_name(const std::string& s) {
    if (s == "tau") return Involution::tau;
    if (s == "eta") return Involution::eta;
    throw std::invalid_argument("unknown involution: " + s);
}

int HalfGraph::total_degree() const {
    int d = d0;
    for (const Edge& e : edges) d += 2 * e.deg;
    return d;
}

std::vector<std::vector<Flag>> HalfGraph::edge_flags_per_vertex() const {
    std::vector<std::vector<Flag>> flags(vertex_count());
    int i = labels[root];
    flags[root].push_back(Flag{i, WeightSystem::conj(i), d0});
    for (const Edge& e : edges) {
        flags[e.a].push_back(Flag{labels[e.a], labels[e.b], e.deg});
        flags[e.b].push_back(Flag{labels[e.b], labels[e.a], e.deg});
    }
    return flags;
}

std::vector<int> HalfGraph::valences() const {
    std::vector<int> val(vertex_count(), 0);
    val[root] += 1;  // half-edge
    for (const Edge& e : edges) {
        val[e.a] += 1;
        val[e.b] += 1;
    }
    for (const Mark& m : marks) val[m.vertex] += 1;
    return val;
}

std::vector<std::vector<HalfGraph::Mark>> HalfGraph::marks_per_vertex() const {
    std::vector<std::vector<Mark>> by_vertex(vertex_count());
    for (const Mark& m : marks) by_vertex[m.vertex].push_back(m);
    for (auto& v : by_vertex)
        std::sort(v.begin(), v.end(), [](const Mark& x, const Mark& y) { return x.index < y.index; });
    return by_vertex;
}

namespace {

struct TreeView {
    std::vector<std::vector<std::pair<int, int>>> children;  // vertex -> (edge deg, child)
    std::vector<std::vector<HalfGraph::Mark>> marks;
};

TreeView build_tree(const HalfGraph& g) {
    TreeView t;
    t.children.resize(g.vertex_count());
    t.marks = g.marks_per_vertex();
    // Orient edges away from the root.
    std::vector<std::vector<std::pair<int, int>>> adj(g.vertex_count());
    for (const auto& e : g.edges) {
        adj[e.a].push_back({e.deg, e.b});
        adj[e.b].push_back({e.deg, e.a});
    }
    std::vector<int> stack{g.root};
    std::vector<bool> seen(g.vertex_count(), false);
    seen[g.root] = true;
    while (!stack.empty()) {
        int v = stack.back();
        stack.pop_back();
        for (auto [deg, w] : adj[v]) {
            if (seen[w]) continue;
            seen[w] = true;
            t.children[v].push_back({deg, w});
            stack.push_back(w);
        }
    }
    for (bool s : seen)
        if (!s) throw std::invalid_argument("half-graph is not a connected tree");
    return t;
}

std::string subtree_key(const TreeView& t, const HalfGraph& g, int v) {
    std::string key = "L" + std::to_string(g.labels[v]);
    key += "[";
    for (const auto& m : t.marks[v]) {
        key += std::to_string(m.index);
        key += (m.sign > 0 ? '+' : '-');
        key += ',';
    }
    key += "]";
    std::vector<std::string> child_keys;
    child_keys.reserve(t.children[v].size());
    for (auto [deg, w] : t.children[v])
        child_keys.push_back("D" + std::to_string(deg) + "(" + subtree_key(t, g, w) + ")");
    std::sort(child_keys.begin(), child_keys.end());
    for (const auto& k : child_keys) key += k;
    return key;
}

long subtree_aut(const TreeView& t, const HalfGraph& g, int v, std::string* key_out) {
    std::string key = "L" + std::to_string(g.labels[v]);
    key += "[";
    for (const auto& m : t.marks[v]) {
        key += std::to_string(m.index);
        key += (m.sign > 0 ? '+' : '-');
        key += ',';
    }
    key += "]";
    long aut = 1;
    std::vector<std::string> child_keys;
    for (auto [deg, w] : t.children[v]) {
        std::string ck;
        aut *= subtree_aut(t, g, w, &ck);
        child_keys.push_back("D" + std::to_string(deg) + "(" + ck + ")");
    }
    std::sort(child_keys.begin(), child_keys.end());
    // Identical decorated child subtrees can be permuted freely; a subtree
    // holding a marked point never matches another, so marks stay fixed.
    long run = 1;
    for (std::size_t i = 0; i < child_keys.size(); ++i) {
        if (i > 0 && child_keys[i] == child_keys[i - 1]) {
            ++run;
            aut *= run;
        } else {
            run = 1;
        }
        key += child_keys[i];
    }
    if (key_out) *key_out = key;
    return aut;
}

void emit_canonical(const TreeView& t, const HalfGraph& g, int v, int parent_new, int edge_deg,
                    HalfGraph& out) {
    int id = out.vertex_count();
    out.labels.push_back(g.labels[v]);
    if (parent_new >= 0) out.edges.push_back({parent_new, id, edge_deg});
    for (const auto& m : t.marks[v]) out.marks.push_back({m.index, id, m.sign});
    std::vector<std::pair<std::string, std::pair<int, int>>> ordered;
    for (auto [deg, w] : t.children[v])
        ordered.push_back({"D" + std::to_string(deg) + "(" + subtree_key(t, g, w) + ")", {deg, w}});
    std::sort(ordered.begin(), ordered.end(),
              [](const auto& x, const auto& y) { return x.first < y.first; });
    for (const auto& [k, dw] : ordered) emit_canonical(t, g, dw.second, id, dw.first, out);
}

}  // namespace

std::string canonical_key(const HalfGraph& g) {
    TreeView t = build_tree(g);
    return "d0=" + std::to_string(g.d0) + ":" + subtree_key(t, g, g.root);
}

HalfGraph canonicalize(const HalfGraph& g) {
    TreeView t = build_tree(g);
    HalfGraph out;
    out.d0 = g.d0;
    out.root = 0;
    emit_canonical(t, g, g.root, -1, 0, out);
    std::sort(out.marks.begin(), out.marks.end(),
              [](const HalfGraph::Mark& a, const HalfGraph::Mark& b) { return a.index < b.index; });
    return out;
}

long automorphism_order(const HalfGraph& g) {
    TreeView t = build_tree(g);
    return subtree_aut(t, g, g.root, nullptr);
}

long combinatorial_denominator(const HalfGraph& g) {
    long d = automorphism_order(g) * g.d0;
    for (const auto& e : g.edges) d *= e.deg;
    return d;
}

}  // namespace realgw
