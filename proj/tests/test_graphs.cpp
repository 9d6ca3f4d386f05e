#include <doctest.h>

#include <algorithm>
#include <map>
#include <set>

#include "realgw/graph_enum.hpp"

using realgw::GraphQuery;
using realgw::HalfGraph;
using realgw::Involution;
using realgw::SignMode;

namespace {

HalfGraph single_vertex(int label, int d0, std::vector<HalfGraph::Mark> marks = {}) {
    HalfGraph g;
    g.d0 = d0;
    g.root = 0;
    g.labels = {label};
    g.marks = std::move(marks);
    return g;
}

// Brute-force isomorphism test: try every root-fixing vertex bijection.
bool isomorphic(const HalfGraph& a, const HalfGraph& b) {
    if (a.d0 != b.d0 || a.vertex_count() != b.vertex_count() || a.edges.size() != b.edges.size() ||
        a.marks.size() != b.marks.size())
        return false;
    const int n = a.vertex_count();
    std::vector<int> perm(n);
    for (int i = 0; i < n; ++i) perm[i] = i;
    auto edge_deg = [](const HalfGraph& g, int x, int y) {
        for (const auto& e : g.edges)
            if ((e.a == x && e.b == y) || (e.a == y && e.b == x)) return e.deg;
        return -1;
    };
    std::sort(perm.begin(), perm.end());
    do {
        if (perm[a.root] != b.root) continue;
        bool ok = true;
        for (int v = 0; v < n && ok; ++v)
            if (a.labels[v] != b.labels[perm[v]]) ok = false;
        for (const auto& e : a.edges) {
            if (!ok) break;
            if (edge_deg(b, perm[e.a], perm[e.b]) != e.deg) ok = false;
        }
        std::map<int, std::pair<int, int>> bmarks;
        for (const auto& m : b.marks) bmarks[m.index] = {m.vertex, m.sign};
        for (const auto& m : a.marks) {
            if (!ok) break;
            auto it = bmarks.find(m.index);
            if (it == bmarks.end() || it->second != std::make_pair(perm[m.vertex], m.sign)) ok = false;
        }
        if (ok) return true;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return false;
}

// Independent census: enumerate raw decorated trees, then count isomorphism
// classes by pairwise brute-force comparison (no canonical keys involved).
std::vector<HalfGraph> brute_force_census(const GraphQuery& q) {
    std::vector<HalfGraph> classes;
    auto consider = [&](const HalfGraph& g) {
        for (const auto& seen : classes)
            if (isomorphic(g, seen)) return;
        classes.push_back(g);
    };
    for (int d0 = q.d; d0 >= 1; d0 -= 2) {
        if ((realgw::involution_parity(q.phi) + realgw::involution_parity(q.c) * d0) % 2 != 0) continue;
        int budget = (q.d - d0) / 2;
        // trees with at most budget+1 vertices, parents precede children
        for (int n = 1; n <= budget + 1; ++n) {
            if (n - 1 > budget) continue;
            std::vector<int> parent(n, 0), deg(n, 0), label(n, 0);
            std::vector<int> mv(q.l, 0), ms(q.l, 1);
            auto emit = [&]() {
                HalfGraph g;
                g.d0 = d0;
                g.root = 0;
                g.labels = label;
                for (int v = 1; v < n; ++v) g.edges.push_back({parent[v], v, deg[v]});
                for (int k = 0; k < q.l; ++k) g.marks.push_back({k + 1, mv[k], ms[k]});
                consider(g);
            };
            auto marks = [&](auto&& self, int k) -> void {
                if (k == q.l) return emit();
                for (int v = 0; v < n; ++v)
                    for (int s : (q.sign_mode == SignMode::plus_only ? std::vector<int>{1}
                                                                     : std::vector<int>{1, -1})) {
                        mv[k] = v;
                        ms[k] = s;
                        self(self, k + 1);
                    }
            };
            auto labels = [&](auto&& self, int v) -> void {
                if (v == n) return marks(marks, 0);
                for (int lab = 1; lab <= 2 * q.M; ++lab) {
                    if (v > 0 && lab == label[parent[v]]) continue;
                    label[v] = lab;
                    self(self, v + 1);
                }
            };
            auto degrees = [&](auto&& self, int v, int left) -> void {
                if (v == n) {
                    if (left == 0) labels(labels, 0);
                    return;
                }
                for (int d = 1; d <= left; ++d) {
                    deg[v] = d;
                    self(self, v + 1, left - d);
                }
            };
            auto parents = [&](auto&& self, int v) -> void {
                if (v == n) {
                    if (n == 1) {
                        if (budget == 0) labels(labels, 0);
                    } else {
                        degrees(degrees, 1, budget);
                    }
                    return;
                }
                for (int p = 0; p < v; ++p) {
                    parent[v] = p;
                    self(self, v + 1);
                }
            };
            parents(parents, 1);
        }
    }
    return classes;
}

}  // namespace

TEST_CASE("forced degree-1 census") {
    auto graphs = realgw::half_graph_census({2, 1, 1, Involution::tau, Involution::tau, SignMode::plus_only});
    REQUIRE(graphs.size() == 4);
    std::set<int> roots;
    for (const auto& g : graphs) {
        CHECK(g.d0 == 1);
        CHECK(g.vertex_count() == 1);
        CHECK(g.edges.empty());
        REQUIRE(g.marks.size() == 1);
        CHECK(g.marks[0].sign == 1);
        roots.insert(g.root_label());
    }
    CHECK(roots == std::set<int>{1, 2, 3, 4});
}

TEST_CASE("parity-empty censuses") {
    CHECK(realgw::half_graph_census({1, 1, 0, Involution::eta, Involution::tau, SignMode::all_signs})
              .empty());
    CHECK(realgw::half_graph_census({1, 2, 0, Involution::eta, Involution::eta, SignMode::all_signs})
              .empty());
    CHECK(realgw::half_graph_census({2, 3, 1, Involution::tau, Involution::eta, SignMode::all_signs})
              .empty());  // c = eta needs even d0
}

TEST_CASE("census invariants") {
    for (int d : {1, 2, 3, 4, 5}) {
        Involution c = d % 2 == 1 ? Involution::tau : Involution::eta;
        auto graphs = realgw::half_graph_census({2, d, 2, Involution::tau, c, SignMode::all_signs});
        CHECK(!graphs.empty());
        std::set<std::string> keys;
        for (const auto& g : graphs) {
            CHECK(g.total_degree() == d);                     // degree conservation
            CHECK(g.d0 % 2 == d % 2);                         // halving parity
            CHECK(realgw::parity_admissible(Involution::tau, c, g.d0));
            CHECK(keys.insert(realgw::canonical_key(g)).second);  // no duplicates
            for (const auto& e : g.edges) CHECK(g.labels[e.a] != g.labels[e.b]);
        }
    }
}

TEST_CASE("enumeration matches the brute-force census") {
    std::vector<GraphQuery> queries = {
        {1, 3, 1, Involution::tau, Involution::tau, SignMode::all_signs},
        {1, 3, 1, Involution::tau, Involution::tau, SignMode::plus_only},
        {2, 3, 1, Involution::tau, Involution::tau, SignMode::all_signs},
        {1, 5, 0, Involution::tau, Involution::tau, SignMode::all_signs},
        {2, 2, 1, Involution::tau, Involution::eta, SignMode::all_signs},
    };
    for (const auto& q : queries) {
        auto fast = realgw::half_graph_census(q);
        auto brute = brute_force_census(q);
        REQUIRE(fast.size() == brute.size());
        // multiset of (d0, edge count) pairs agrees
        std::multiset<std::pair<int, int>> fast_census, brute_census;
        for (const auto& g : fast) fast_census.insert({g.d0, static_cast<int>(g.edges.size())});
        for (const auto& g : brute) brute_census.insert({g.d0, static_cast<int>(g.edges.size())});
        CHECK(fast_census == brute_census);
        // and each brute class appears exactly once among the fast ones
        for (const auto& b : brute) {
            int hits = 0;
            for (const auto& f : fast)
                if (isomorphic(b, f)) ++hits;
            CHECK(hits == 1);
        }
    }
}

TEST_CASE("automorphism orders") {
    CHECK(realgw::automorphism_order(single_vertex(1, 1)) == 1);

    HalfGraph twin;  // root with two identical unmarked children
    twin.d0 = 1;
    twin.root = 0;
    twin.labels = {1, 3, 3};
    twin.edges = {{0, 1, 1}, {0, 2, 1}};
    CHECK(realgw::automorphism_order(twin) == 2);

    HalfGraph distinct = twin;
    distinct.labels = {1, 3, 4};
    CHECK(realgw::automorphism_order(distinct) == 1);

    HalfGraph marked = twin;  // a mark rigidifies one branch
    marked.marks = {{1, 1, 1}};
    CHECK(realgw::automorphism_order(marked) == 1);

    HalfGraph triple;
    triple.d0 = 1;
    triple.root = 0;
    triple.labels = {1, 3, 3, 3};
    triple.edges = {{0, 1, 2}, {0, 2, 2}, {0, 3, 2}};
    CHECK(realgw::automorphism_order(triple) == 6);

    HalfGraph nested;  // two identical two-vertex branches
    nested.d0 = 1;
    nested.root = 0;
    nested.labels = {1, 3, 1, 3, 1};
    nested.edges = {{0, 1, 1}, {1, 2, 2}, {0, 3, 1}, {3, 4, 2}};
    CHECK(realgw::automorphism_order(nested) == 2);
}

TEST_CASE("combinatorial denominator") {
    CHECK(realgw::combinatorial_denominator(single_vertex(1, 1)) == 1);
    CHECK(realgw::combinatorial_denominator(single_vertex(2, 3)) == 3);

    HalfGraph chain;
    chain.d0 = 1;
    chain.root = 0;
    chain.labels = {1, 3};
    chain.edges = {{0, 1, 2}};
    CHECK(realgw::combinatorial_denominator(chain) == 2);

    HalfGraph twin;
    twin.d0 = 3;
    twin.root = 0;
    twin.labels = {1, 3, 3};
    twin.edges = {{0, 1, 2}, {0, 2, 2}};
    CHECK(realgw::combinatorial_denominator(twin) == 2 * 3 * 2 * 2);
}

TEST_CASE("canonical form is stable under relabeling vertex ids") {
    HalfGraph g;
    g.d0 = 1;
    g.root = 1;
    g.labels = {3, 1, 4};
    g.edges = {{1, 0, 2}, {1, 2, 1}};
    g.marks = {{1, 2, -1}};
    HalfGraph h;  // same tree, ids permuted
    h.d0 = 1;
    h.root = 0;
    h.labels = {1, 4, 3};
    h.edges = {{0, 2, 2}, {0, 1, 1}};
    h.marks = {{1, 1, -1}};
    CHECK(realgw::canonical_key(g) == realgw::canonical_key(h));
    CHECK(realgw::canonicalize(g).labels == realgw::canonicalize(h).labels);
    CHECK(realgw::automorphism_order(g) == realgw::automorphism_order(h));
}
