#include "realgw/verification.hpp"

#include <algorithm>
#include <chrono>
#include <functional>
#include <random>
#include <sstream>

namespace realgw::verify {

namespace {

using Clock = std::chrono::steady_clock;

struct CaseCheck {
    bool ok = true;
    std::ostringstream log;

    void expect(bool cond, const std::string& what) {
        if (!cond) {
            ok = false;
            if (log.tellp() > 0) log << "; ";
            log << what;
        }
    }
};

CriterionResult run_timed(int id, const std::string& name, double limit_seconds,
                          const std::function<void(CaseCheck&)>& body) {
    CriterionResult r;
    r.id = id;
    r.name = name;
    CaseCheck check;
    auto start = Clock::now();
    try {
        body(check);
    } catch (const std::exception& e) {
        check.expect(false, std::string("exception: ") + e.what());
    }
    r.seconds = std::chrono::duration<double>(Clock::now() - start).count();
    if (limit_seconds > 0 && r.seconds >= limit_seconds) {
        check.expect(false, "runtime limit exceeded");
    }
    r.pass = check.ok;
    r.details = check.log.str();
    return r;
}

/// All length-l vectors of odd positive integers summing to `total`.
std::vector<std::vector<int>> odd_insertions(int total, int l) {
    std::vector<std::vector<int>> out;
    std::vector<int> cur(l);
    auto rec = [&](auto&& self, int idx, int left) -> void {
        if (idx == l - 1) {
            if (left >= 1 && left % 2 == 1) {
                cur[idx] = left;
                out.push_back(cur);
            }
            return;
        }
        for (int v = 1; v <= left - (l - 1 - idx); v += 2) {
            cur[idx] = v;
            self(self, idx + 1, left - v);
        }
    };
    if (l >= 1) rec(rec, 0, total);
    return out;
}

std::string vec_str(const std::vector<int>& t) {
    std::string s = "(";
    for (std::size_t i = 0; i < t.size(); ++i) {
        if (i) s += ",";
        s += std::to_string(t[i]);
    }
    return s + ")";
}

Rational run_invariant(int M, int d, Involution phi, const std::vector<int>& t,
                       const Options& opts, long seed = 0, int samples = 3,
                       SumPath path = SumPath::full_signed,
                       EvalMode mode = EvalMode::specialized) {
    InvariantQuery q;
    q.M = M;
    q.d = d;
    q.phi = phi;
    q.t = t;
    q.seed = seed;
    q.samples = samples;
    q.path = path;
    q.mode = mode;
    EngineOptions eng;
    eng.census_cache_dir = opts.census_cache_dir;
    return invariant(q, eng).value;
}

struct AnchorCase {
    int M;
    int d;
    std::vector<int> t;
    long expected;
};

const std::vector<AnchorCase>& degree1_cases() {
    static const std::vector<AnchorCase> cases = {
        {2, 1, {3}, 1},       {2, 1, {3, 1}, 1},    {2, 1, {1, 3}, 1},
        {2, 1, {1, 1, 3}, 1}, {2, 1, {1, 3, 1}, 1}, {2, 1, {3, 1, 1}, 1},
    };
    return cases;
}

// ---- combinatorial oracles (criterion 13) ----------------------------------

long brute_force_aut(const HalfGraph& g) {
    const int n = g.vertex_count();
    std::vector<int> perm(n);
    for (int i = 0; i < n; ++i) perm[i] = i;
    // Edge multimap keyed on endpoints for O(1)-ish lookup.
    auto edge_deg = [&](int a, int b) -> int {
        for (const auto& e : g.edges) {
            if ((e.a == a && e.b == b) || (e.a == b && e.b == a)) return e.deg;
        }
        return -1;
    };
    long count = 0;
    std::sort(perm.begin(), perm.end());
    do {
        if (perm[g.root] != g.root) continue;
        bool ok = true;
        for (int v = 0; v < n && ok; ++v)
            if (g.labels[perm[v]] != g.labels[v]) ok = false;
        for (const auto& e : g.edges) {
            if (!ok) break;
            if (edge_deg(perm[e.a], perm[e.b]) != e.deg) ok = false;
        }
        for (const auto& m : g.marks) {
            if (!ok) break;
            if (perm[m.vertex] != m.vertex) ok = false;
        }
        if (ok) ++count;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return count;
}

std::vector<HalfGraph> aut_oracle_family() {
    std::vector<HalfGraph> family;
    std::mt19937_64 rng(20240901u);
    // Every rooted shape on up to six vertices, with decorations drawn from a
    // small alphabet: deterministic pseudo-random picks plus a fully
    // symmetric labeling that forces nontrivial automorphisms.
    for (int n = 1; n <= 6; ++n) {
        std::vector<int> parent(n, 0);
        auto shapes = [&](auto&& self, int v) -> void {
            if (v == n) {
                for (int variant = 0; variant < (n == 1 ? 2 : 6); ++variant) {
                    HalfGraph g;
                    g.d0 = 1 + static_cast<int>(rng() % 2);
                    g.root = 0;
                    g.labels.assign(n, 1);
                    bool symmetric = variant == 0;
                    for (int w = 1; w < n; ++w) {
                        int parent_label = g.labels[parent[w]];
                        int lab;
                        if (symmetric) {
                            lab = parent_label == 1 ? 3 : 1;
                        } else {
                            do {
                                lab = 1 + static_cast<int>(rng() % 4);
                            } while (lab == parent_label);
                        }
                        g.labels[w] = lab;
                        g.edges.push_back({parent[w], w, symmetric ? 1 : 1 + static_cast<int>(rng() % 2)});
                    }
                    if (variant == 2 && n >= 2) {
                        int l = 1;
                        for (int w = 0; w < n; w += 2) g.marks.push_back({l++, w, (w % 4 == 0) ? 1 : -1});
                    }
                    family.push_back(g);
                }
                return;
            }
            for (int q = 0; q < v; ++q) {
                parent[v] = q;
                self(self, v + 1);
            }
        };
        shapes(shapes, 1);
    }
    return family;
}

}  // namespace

std::vector<CriterionResult> run_acceptance(const Options& opts) {
    std::vector<CriterionResult> results;

    results.push_back(run_timed(1, "degree-1 anchors (M=2)", 0, [&](CaseCheck& c) {
        for (const auto& cs : degree1_cases()) {
            auto start = Clock::now();
            Rational v = run_invariant(cs.M, cs.d, Involution::tau, cs.t, opts);
            double elapsed = std::chrono::duration<double>(Clock::now() - start).count();
            c.expect(v == Rational(cs.expected),
                     "N_1" + vec_str(cs.t) + " = " + v.to_string() + ", want 1");
            c.expect(elapsed < 1.0, "case " + vec_str(cs.t) + " slower than 1 s");
        }
    }));

    results.push_back(run_timed(2, "degree-3 anchor (M=2, t=(3,3,3))", 30.0, [&](CaseCheck& c) {
        Rational v = run_invariant(2, 3, Involution::tau, {3, 3, 3}, opts);
        c.expect(v == Rational(-1), "N_3(3,3,3) = " + v.to_string() + ", want -1");
    }));

    results.push_back(run_timed(3, "degree-5 anchor (M=2, t=(3,3,3,3,3))", 600.0, [&](CaseCheck& c) {
        Rational v = run_invariant(2, 5, Involution::tau, {3, 3, 3, 3, 3}, opts);
        c.expect(v == Rational(5), "N_5(3,3,3,3,3) = " + v.to_string() + ", want 5");
    }));

    results.push_back(run_timed(4, "higher-rank degree-1 anchor (M=4, t=(7,1))", 5.0, [&](CaseCheck& c) {
        Rational v = run_invariant(4, 1, Involution::tau, {7, 1}, opts);
        c.expect(v == Rational(1), "N_1(7,1) = " + v.to_string() + ", want 1");
    }));

    results.push_back(run_timed(5, "sign relation eta = -tau", 60.0, [&](CaseCheck& c) {
        std::vector<AnchorCase> cases = degree1_cases();
        cases.push_back({2, 3, {3, 3, 3}, -1});
        for (const auto& cs : cases) {
            Rational vt = run_invariant(cs.M, cs.d, Involution::tau, cs.t, opts);
            Rational ve = run_invariant(cs.M, cs.d, Involution::eta, cs.t, opts);
            c.expect(ve == -vt, "eta invariant " + vec_str(cs.t) + " = " + ve.to_string() +
                                    ", want " + (-vt).to_string());
        }
    }));

    results.push_back(run_timed(6, "vanishing at even degree", 120.0, [&](CaseCheck& c) {
        for (const auto& t : {std::vector<int>{1, 5}, {5, 1}, {3, 3}}) {
            Rational v = run_invariant(2, 2, Involution::tau, t, opts);
            c.expect(v == Rational(0), "N_2" + vec_str(t) + " = " + v.to_string() + ", want 0");
        }
        InvariantQuery q;
        q.M = 2;
        q.d = 2;
        q.phi = Involution::eta;
        q.t = {1, 5};
        InvariantResult r = invariant(q);
        c.expect(r.value == Rational(0) && r.graph_count_tau == 0 && r.graph_count_eta == 0,
                 "eta census at even degree not empty");
    }));

    results.push_back(run_timed(7, "vanishing at even insertion", 10.0, [&](CaseCheck& c) {
        Rational v = run_invariant(2, 1, Involution::tau, {2, 2}, opts);
        c.expect(v == Rational(0), "N_1(2,2) = " + v.to_string() + ", want 0");
    }));

    results.push_back(run_timed(8, "degree-1 closed-form oracle", 60.0, [&](CaseCheck& c) {
        for (int M : {2, 4}) {
            for (int l = 1; l <= 3; ++l) {
                int total = 2 * M - 2 + l;
                for (const auto& t : odd_insertions(total, l)) {
                    Rational engine = run_invariant(M, 1, Involution::tau, t, opts);
                    Rational oracle = degree1_closed_form(M, t);
                    c.expect(engine == oracle, "M=" + std::to_string(M) + " t=" + vec_str(t) +
                                                   ": engine " + engine.to_string() + " vs oracle " +
                                                   oracle.to_string());
                }
            }
        }
    }));

    results.push_back(run_timed(9, "residue identity", 10.0, [&](CaseCheck& c) {
        for (int M = 1; M <= 5; ++M) {
            Rational v = residue_identity(M, 3, 2024 + M);
            c.expect(v == Rational(1), "residue sum M=" + std::to_string(M) + " = " + v.to_string());
        }
    }));

    results.push_back(run_timed(10, "complex line count", 30.0, [&](CaseCheck& c) {
        for (int M : {1, 2, 3}) {
            Rational v = complex_line_check(M);
            c.expect(v == Rational(1), "line count M=" + std::to_string(M) + " = " + v.to_string());
        }
    }));

    results.push_back(run_timed(11, "weight independence", 900.0, [&](CaseCheck& c) {
        // Every criterion 1-8 invariant, recomputed on a disjoint seed stream:
        // in total each value is certified at >= 6 independent generic points.
        std::vector<AnchorCase> cases = degree1_cases();
        cases.push_back({2, 3, {3, 3, 3}, -1});
        cases.push_back({2, 5, {3, 3, 3, 3, 3}, 5});
        cases.push_back({4, 1, {7, 1}, 1});
        for (const auto& cs : cases) {
            Rational a = run_invariant(cs.M, cs.d, Involution::tau, cs.t, opts, 0);
            Rational b = run_invariant(cs.M, cs.d, Involution::tau, cs.t, opts, 424243);
            c.expect(a == b, "seed dependence at d=" + std::to_string(cs.d) + " t=" + vec_str(cs.t));
        }
        for (const auto& t : {std::vector<int>{1, 5}, {3, 3}}) {
            Rational a = run_invariant(2, 2, Involution::tau, t, opts, 0);
            Rational b = run_invariant(2, 2, Involution::tau, t, opts, 424243);
            c.expect(a == b, "seed dependence at d=2 t=" + vec_str(t));
        }
    }));

    results.push_back(run_timed(12, "mode and path agreement", 900.0, [&](CaseCheck& c) {
        // symbolic vs specialized on every M=2, d<=3 anchor family
        std::vector<std::pair<int, std::vector<int>>> sym_cases = {
            {1, {3}}, {1, {3, 1}}, {2, {3, 3}}, {3, {3, 3, 3}}};
        for (const auto& [d, t] : sym_cases) {
            Rational specialized_value = run_invariant(2, d, Involution::tau, t, opts);
            Rational symb = run_invariant(2, d, Involution::tau, t, opts, 0, 3,
                                          SumPath::full_signed, EvalMode::symbolic);
            c.expect(specialized_value == symb, "d=" + std::to_string(d) + " t=" + vec_str(t) + ": specialized " +
                                       specialized_value.to_string() + " vs symbolic " + symb.to_string());
        }
        // reduced vs general on all odd cases of criteria 1-4
        std::vector<AnchorCase> cases = degree1_cases();
        cases.push_back({2, 3, {3, 3, 3}, -1});
        cases.push_back({2, 5, {3, 3, 3, 3, 3}, 5});
        cases.push_back({4, 1, {7, 1}, 1});
        for (const auto& cs : cases) {
            for (Involution phi : {Involution::tau, Involution::eta}) {
                Rational general = run_invariant(cs.M, cs.d, phi, cs.t, opts);
                Rational reduced =
                    run_invariant(cs.M, cs.d, phi, cs.t, opts, 0, 3, SumPath::reduced_plus);
                c.expect(general == reduced, "path mismatch at d=" + std::to_string(cs.d) +
                                                 " t=" + vec_str(cs.t) + " phi=" + involution_name(phi));
            }
        }
    }));

    results.push_back(run_timed(13, "combinatorial oracles", 120.0, [&](CaseCheck& c) {
        // automorphism order vs brute-force permutation search, <= 6 vertices
        for (const HalfGraph& g : aut_oracle_family()) {
            long fast = automorphism_order(g);
            long brute = brute_force_aut(g);
            c.expect(fast == brute, "aut mismatch: fast " + std::to_string(fast) + " vs brute " +
                                        std::to_string(brute) + " on " + canonical_key(g));
        }
        // vertex integral expansion vs closed form, valence <= 6, symbolic in
        // one independent generator per flag
        for (int val = 3; val <= 6; ++val) {
            for (int flags = 1; flags <= val; ++flags) {
                WeightSystem dummy(flags);
                SymbolicField f{dummy};
                std::vector<RationalFunction> ws;
                for (int i = 0; i < flags; ++i)
                    ws.push_back(RationalFunction(MultiPolynomial::variable(flags, i)));
                RationalFunction expansion = vertex_integral(f, ws, val);
                RationalFunction inv_sum = RationalFunction::constant(flags, Rational(0));
                RationalFunction prod = f.one();
                for (const auto& w : ws) {
                    inv_sum += f.one() / w;
                    prod = prod * w;
                }
                RationalFunction closed = pow(inv_sum, static_cast<unsigned>(val - 3)) / prod;
                c.expect(expansion == closed,
                         "vertex integral mismatch at valence " + std::to_string(val) + " with " +
                             std::to_string(flags) + " flags");
            }
        }
        // string equation for psi integrals up to 7 points before appending
        for (int n = 3; n <= 7; ++n) {
            std::vector<int> a(n, 0);
            auto rec = [&](auto&& self, int idx, int left) -> void {
                if (idx == n - 1) {
                    a[idx] = left;
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
                    c.expect(lhs == rhs, "string equation fails at n=" + std::to_string(n));
                    return;
                }
                for (int v = 0; v <= left; ++v) {
                    a[idx] = v;
                    self(self, idx + 1, left - v);
                }
            };
            rec(rec, 0, n - 2);
        }
    }));

    return results;
}

bool all_passed(const std::vector<CriterionResult>& results) {
    return std::all_of(results.begin(), results.end(), [](const CriterionResult& r) { return r.pass; });
}

std::string render_line(const CriterionResult& r) {
    std::ostringstream out;
    out << (r.pass ? "PASS" : "FAIL") << " criterion " << r.id << ": " << r.name;
    char buf[32];
    std::snprintf(buf, sizeof(buf), " [%.2fs]", r.seconds);
    out << buf;
    if (!r.pass && !r.details.empty()) out << " -- " << r.details;
    return out.str();
}

}  // namespace realgw::verify
