#include "realgw/graph_enum.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace realgw {

std::string sign_mode_name(SignMode m) { return m == SignMode::all_signs ? "all_signs" : "plus_only"; }

bool parity_admissible(Involution phi, Involution c, int d0) {
    return (involution_parity(phi) + involution_parity(c) * d0) % 2 == 0;
}

namespace {

// One tree shape: parent pointers (vertex 0 is the root, parents precede
// children) and per-vertex incoming edge degrees. Each isomorphism class may
// appear under several numberings; the caller deduplicates by canonical key.
struct Shape {
    std::vector<int> parent;    // parent[v] < v for v >= 1
    std::vector<int> edge_deg;  // degree of edge (parent[v], v), v >= 1
};

template <class Fn>
void for_each_composition(int total, int parts, std::vector<int>& buf, int idx, Fn&& fn) {
    if (parts == 0) {
        if (total == 0) fn();
        return;
    }
    if (idx == parts - 1) {
        buf[idx] = total;
        fn();
        return;
    }
    for (int v = 0; v <= total; ++v) {
        buf[idx] = v;
        for_each_composition(total - v, parts, buf, idx + 1, fn);
    }
}

template <class Fn>
void for_each_shape(int edge_budget, Fn&& fn) {
    for (int n = 1; n <= edge_budget + 1; ++n) {
        const int n_edges = n - 1;
        if (n_edges > edge_budget) break;
        Shape s;
        s.parent.assign(n, 0);
        s.edge_deg.assign(n, 0);
        // All parent arrays with parent[v] < v.
        std::vector<int> p(n, 0);
        auto parents = [&](auto&& self, int v) -> void {
            if (v == n) {
                // Degrees >= 1 summing to edge_budget.
                std::vector<int> extra(std::max(n_edges, 1), 0);
                for_each_composition(edge_budget - n_edges, n_edges, extra, 0, [&]() {
                    for (int w = 1; w < n; ++w) {
                        s.parent[w] = p[w];
                        s.edge_deg[w] = 1 + extra[w - 1];
                    }
                    fn(s);
                });
                return;
            }
            for (int q = 0; q < v; ++q) {
                p[v] = q;
                self(self, v + 1);
            }
        };
        if (n == 1) {
            if (edge_budget == 0) fn(s);
        } else if (edge_budget >= n_edges) {
            parents(parents, 1);
        }
    }
}

}  // namespace

void enumerate_half_graphs(const GraphQuery& q, const std::function<void(const HalfGraph&)>& sink) {
    if (q.M < 1 || q.d < 1 || q.l < 0) throw std::invalid_argument("bad graph query");
    if (q.sign_mode == SignMode::all_signs && q.l > 20)
        throw std::invalid_argument("sign expansion over more than 20 marked points");
    const int n_labels = 2 * q.M;
    // Sign vectors are rigid decorations on distinguishable marked points, so
    // isomorphism classes factor as (all-plus class) x (sign assignment).
    // Enumerate all-plus classes first, then expand.
    std::vector<HalfGraph> plus_classes;
    std::set<std::string> seen;

    for (int d0 = q.d; d0 >= 1; d0 -= 2) {
        if (!parity_admissible(q.phi, q.c, d0)) continue;
        const int edge_budget = (q.d - d0) / 2;
        for_each_shape(edge_budget, [&](const Shape& s) {
            const int n = static_cast<int>(s.parent.size());
            std::vector<int> label(n, 0);
            std::vector<int> mark_vertex(q.l, 0);

            auto emit = [&]() {
                HalfGraph g;
                g.d0 = d0;
                g.root = 0;
                g.labels = label;
                for (int w = 1; w < n; ++w) g.edges.push_back({s.parent[w], w, s.edge_deg[w]});
                for (int k = 0; k < q.l; ++k) g.marks.push_back({k + 1, mark_vertex[k], 1});
                HalfGraph canon = canonicalize(g);
                std::string key = canonical_key(canon);
                if (seen.insert(key).second) plus_classes.push_back(std::move(canon));
            };

            auto assign_marks = [&](auto&& self, int k) -> void {
                if (k == q.l) {
                    emit();
                    return;
                }
                for (int v = 0; v < n; ++v) {
                    mark_vertex[k] = v;
                    self(self, k + 1);
                }
            };

            auto assign_labels = [&](auto&& self, int v) -> void {
                if (v == n) {
                    assign_marks(assign_marks, 0);
                    return;
                }
                for (int lab = 1; lab <= n_labels; ++lab) {
                    if (v > 0 && lab == label[s.parent[v]]) continue;  // adjacent labels differ
                    label[v] = lab;
                    self(self, v + 1);
                }
            };
            assign_labels(assign_labels, 0);
        });
    }

    if (q.sign_mode == SignMode::plus_only) {
        std::vector<std::pair<std::string, HalfGraph>> found;
        found.reserve(plus_classes.size());
        for (HalfGraph& g : plus_classes) {
            std::string key = canonical_key(g);
            found.push_back({std::move(key), std::move(g)});
        }
        std::sort(found.begin(), found.end(), [](const auto& a, const auto& b) {
            if (a.second.d0 != b.second.d0) return a.second.d0 < b.second.d0;
            return a.first < b.first;
        });
        for (const auto& [key, g] : found) sink(g);
        return;
    }
    for (const HalfGraph& g : expand_sign_assignments(plus_classes, q.l)) sink(g);
}

std::vector<HalfGraph> half_graph_census(const GraphQuery& q) {
    std::vector<HalfGraph> out;
    enumerate_half_graphs(q, [&](const HalfGraph& g) { out.push_back(g); });
    return out;
}

std::vector<HalfGraph> expand_sign_assignments(const std::vector<HalfGraph>& plus_census, int l) {
    if (l > 20) throw std::invalid_argument("sign expansion over more than 20 marked points");
    std::vector<std::pair<std::string, HalfGraph>> found;
    found.reserve(plus_census.size() << l);
    for (const HalfGraph& base : plus_census) {
        for (unsigned bits = 0; bits < (1u << l); ++bits) {
            HalfGraph g = base;
            for (auto& m : g.marks) m.sign = (bits >> (m.index - 1)) & 1u ? -1 : 1;
            g = canonicalize(g);  // sign decorations can reorder sibling subtrees
            std::string key = canonical_key(g);
            found.push_back({std::move(key), std::move(g)});
        }
    }
    std::sort(found.begin(), found.end(), [](const auto& a, const auto& b) {
        if (a.second.d0 != b.second.d0) return a.second.d0 < b.second.d0;
        return a.first < b.first;
    });
    std::vector<HalfGraph> out;
    out.reserve(found.size());
    for (auto& [key, g] : found) out.push_back(std::move(g));
    return out;
}

}  // namespace realgw
