#include <CLI11.hpp>
#include <json.hpp>

#include <cstdlib>
#include <iostream>
#include <sstream>

#include "realgw/census_io.hpp"
#include "realgw/verification.hpp"

namespace {

using realgw::Involution;
using realgw::Rational;

std::vector<int> parse_insertions(const std::string& csv) {
    std::vector<int> t;
    std::stringstream ss(csv);
    std::string item;
    while (std::getline(ss, item, ',')) {
        if (item.empty()) continue;
        t.push_back(std::stoi(item));
    }
    return t;
}

std::string default_cache_dir() {
    const char* env = std::getenv("REALGW_CACHE_DIR");
    return env ? env : "";
}

struct CommonArgs {
    int M = 2;
    int d = 1;
    std::string phi = "tau";
    std::string t_csv;
    int samples = 3;
    long seed = 0;
    bool json = false;
    bool symbolic = false;
    bool general_parity = false;
    std::string cache_dir = default_cache_dir();
};

void add_query_flags(CLI::App* cmd, CommonArgs& a, bool with_t) {
    cmd->add_option("--M", a.M, "torus rank M (target P^{2M-1})")->check(CLI::PositiveNumber);
    cmd->add_option("--d", a.d, "curve degree")->check(CLI::PositiveNumber);
    cmd->add_option("--phi", a.phi, "ambient involution: tau or eta")
        ->check(CLI::IsMember({"tau", "eta"}));
    if (with_t) cmd->add_option("--t", a.t_csv, "insertion exponents, comma separated (e.g. 3,3,3)");
    cmd->add_option("--samples", a.samples, "weight points that must agree (>= 3)");
    cmd->add_option("--seed", a.seed, "base seed for weight-point sampling");
    cmd->add_flag("--json", a.json, "machine-readable output");
    cmd->add_flag("--symbolic", a.symbolic, "sum rational functions instead of specializing");
    cmd->add_flag("--general-parity", a.general_parity,
                  "use the general half-edge sign (works for odd M; not acceptance-covered)");
    cmd->add_option("--cache-dir", a.cache_dir, "census cache directory (env REALGW_CACHE_DIR)");
}

realgw::InvariantQuery to_query(const CommonArgs& a) {
    realgw::InvariantQuery q;
    q.M = a.M;
    q.d = a.d;
    q.phi = realgw::involution_from_name(a.phi);
    q.t = parse_insertions(a.t_csv);
    q.mode = a.symbolic ? realgw::EvalMode::symbolic : realgw::EvalMode::specialized;
    q.samples = a.samples;
    q.seed = a.seed;
    q.parity = a.general_parity ? realgw::HalfEdgeSign::general : realgw::HalfEdgeSign::canonical;
    return q;
}

int cmd_compute(const CommonArgs& a) {
    realgw::EngineOptions opts;
    opts.census_cache_dir = a.cache_dir;
    realgw::InvariantResult r = realgw::invariant(to_query(a), opts);
    if (a.json) {
        std::cout << realgw::invariant_result_to_json(r).dump() << "\n";
    } else {
        std::cout << r.value.to_string() << "\n";
    }
    return 0;
}

int cmd_table(const CommonArgs& a, int dmax, int lmax) {
    realgw::EngineOptions opts;
    opts.census_cache_dir = a.cache_dir;
    std::cout << "d,t,value\n";
    for (int d = 1; d <= dmax; ++d) {
        for (int l = 1; l <= lmax; ++l) {
            long total = static_cast<long>(a.M) * (d + 1) - 2 + l;
            if (total < l) continue;
            // all odd compositions of `total` of length l, lexicographic
            std::vector<int> t(l);
            auto rec = [&](auto&& self, int idx, long left) -> void {
                if (idx == l - 1) {
                    if (left >= 1 && left % 2 == 1 && left <= std::numeric_limits<int>::max()) {
                        t[idx] = static_cast<int>(left);
                        realgw::InvariantQuery q = to_query(a);
                        q.d = d;
                        q.t = t;
                        realgw::InvariantResult r = realgw::invariant(q, opts);
                        std::cout << d << ",\"";
                        for (int i = 0; i < l; ++i) std::cout << (i ? "," : "") << t[i];
                        std::cout << "\"," << r.value.to_string() << "\n";
                    }
                    return;
                }
                for (long v = 1; v <= left - (l - 1 - idx); v += 2) {
                    t[idx] = static_cast<int>(v);
                    self(self, idx + 1, left - v);
                }
            };
            rec(rec, 0, total);
        }
    }
    return 0;
}

int cmd_graphs(const CommonArgs& a, int l_opt, const std::string& c_name, bool plus_only,
               bool contributions) {
    realgw::GraphQuery gq;
    gq.M = a.M;
    gq.d = a.d;
    std::vector<int> t = parse_insertions(a.t_csv);
    gq.l = !t.empty() ? static_cast<int>(t.size()) : l_opt;
    gq.phi = realgw::involution_from_name(a.phi);
    gq.c = realgw::involution_from_name(c_name);
    gq.sign_mode = plus_only ? realgw::SignMode::plus_only : realgw::SignMode::all_signs;

    std::vector<realgw::HalfGraph> graphs = a.cache_dir.empty()
                                                ? realgw::half_graph_census(gq)
                                                : realgw::cached_census(gq, a.cache_dir);
    nlohmann::json census = realgw::census_to_json(graphs);
    if (!contributions) {
        std::cout << census.dump() << "\n";
        return 0;
    }
    if (t.empty()) {
        std::cerr << "--contributions needs --t to fix the integrand\n";
        return 2;
    }
    realgw::WeightSystem ws(gq.M);
    realgw::ParityMode mode{a.general_parity ? realgw::HalfEdgeSign::general
                                             : realgw::HalfEdgeSign::canonical,
                            gq.c};
    // A pole at the sampled point reseeds deterministically, like the solver.
    for (long bump = 0; bump < 64; ++bump) {
        realgw::WeightPoint point = realgw::sample_weight_point(gq.M, a.seed + bump);
        try {
            nlohmann::json annotated = census;
            for (std::size_t i = 0; i < graphs.size(); ++i) {
                realgw::LocusContribution lc =
                    realgw::locus_contribution(graphs[i], t, ws, mode, point);
                annotated[i]["contribution"] = realgw::rational_to_json(std::get<Rational>(lc.value));
            }
            nlohmann::json point_json = nlohmann::json::array();
            for (const Rational& v : point.values) point_json.push_back(realgw::rational_to_json(v));
            nlohmann::json out{{"weight_point", point_json}, {"graphs", annotated}};
            std::cout << out.dump() << "\n";
            return 0;
        } catch (const realgw::ZeroDivide&) {
        }
    }
    std::cerr << "no generic weight point found after reseeding\n";
    return 1;
}

int cmd_verify(bool json, const std::string& cache_dir) {
    realgw::verify::Options opts;
    opts.census_cache_dir = cache_dir;
    std::vector<realgw::verify::CriterionResult> results = realgw::verify::run_acceptance(opts);
    if (json) {
        nlohmann::json out = nlohmann::json::array();
        for (const auto& r : results)
            out.push_back(nlohmann::json{{"id", r.id},
                                         {"name", r.name},
                                         {"pass", r.pass},
                                         {"seconds", r.seconds},
                                         {"details", r.details}});
        std::cout << out.dump() << "\n";
    } else {
        for (const auto& r : results) std::cout << realgw::verify::render_line(r) << "\n";
    }
    return realgw::verify::all_passed(results) ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact real genus-zero Gromov-Witten invariants of odd projective spaces"};
    app.require_subcommand(1);

    CommonArgs compute_args;
    CLI::App* compute = app.add_subcommand("compute", "compute one invariant N_d^phi(t)");
    add_query_flags(compute, compute_args, true);
    compute->get_option("--t")->required();

    CommonArgs table_args;
    int dmax = 3, lmax = 3;
    CLI::App* table = app.add_subcommand("table", "tabulate invariants as CSV");
    add_query_flags(table, table_args, false);
    table->add_option("--dmax", dmax, "maximum degree");
    table->add_option("--lmax", lmax, "maximum number of insertions");

    CommonArgs graphs_args;
    int l_opt = 0;
    std::string c_name = "tau";
    bool plus_only = false, contributions = false;
    CLI::App* graphs = app.add_subcommand("graphs", "dump the half-graph census as JSON");
    add_query_flags(graphs, graphs_args, true);
    graphs->add_option("--l", l_opt, "number of marked points (ignored when --t is given)");
    graphs->add_option("--c", c_name, "domain involution class: tau or eta")
        ->check(CLI::IsMember({"tau", "eta"}));
    graphs->add_flag("--plus-only", plus_only, "restrict to all-plus sign assignments");
    graphs->add_flag("--contributions", contributions,
                     "attach each graph's exact contribution at the seeded weight point");

    bool verify_json = false;
    std::string verify_cache = default_cache_dir();
    CLI::App* verify = app.add_subcommand("verify", "run the acceptance checks");
    verify->add_flag("--json", verify_json, "machine-readable report");
    verify->add_option("--cache-dir", verify_cache, "census cache directory");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e) == 0 ? 0 : 2;
    }

    try {
        if (compute->parsed()) return cmd_compute(compute_args);
        if (table->parsed()) return cmd_table(table_args, dmax, lmax);
        if (graphs->parsed())
            return cmd_graphs(graphs_args, l_opt, c_name, plus_only, contributions);
        if (verify->parsed()) return cmd_verify(verify_json, verify_cache);
    } catch (const realgw::SampleDisagreement& e) {
        std::cerr << "consistency failure: " << e.what() << "\n";
        return 1;
    } catch (const std::invalid_argument& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 2;
}
