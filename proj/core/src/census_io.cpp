#include "realgw/census_io.hpp"

#include <filesystem>
#include <fstream>
#include <sstream>

namespace realgw {

namespace {

constexpr int kCensusFormatVersion = 1;

std::string fnv1a64(const std::string& s) {
    std::uint64_t h = 1469598103934665603ull;
    for (unsigned char c : s) {
        h ^= c;
        h *= 1099511628211ull;
    }
    std::ostringstream out;
    out << std::hex << h;
    return out.str();
}

nlohmann::json key_json(const GraphQuery& q) {
    return nlohmann::json{{"M", q.M},
                          {"d", q.d},
                          {"l", q.l},
                          {"phi", involution_name(q.phi)},
                          {"c", involution_name(q.c)},
                          {"sign_mode", sign_mode_name(q.sign_mode)}};
}

}  // namespace

nlohmann::json rational_to_json(const Rational& r) {
    return nlohmann::json{{"num", r.numerator_string()}, {"den", r.denominator_string()}};
}

Rational rational_from_json(const nlohmann::json& j) {
    return Rational::from_strings(j.at("num").get<std::string>(), j.at("den").get<std::string>());
}

nlohmann::json polynomial_to_json(const MultiPolynomial& p) {
    nlohmann::json out = nlohmann::json::array();
    for (const auto& [m, c] : p.terms()) out.push_back(nlohmann::json::array({m, rational_to_json(c)}));
    return out;
}

MultiPolynomial polynomial_from_json(const nlohmann::json& j, int nvars) {
    MultiPolynomial p(nvars);
    for (const auto& term : j) {
        Monomial m = term.at(0).get<Monomial>();
        p += MultiPolynomial::monomial(nvars, m, rational_from_json(term.at(1)));
    }
    return p;
}

nlohmann::json invariant_result_to_json(const InvariantResult& r) {
    return nlohmann::json{{"value", rational_to_json(r.value)},
                          {"graph_count_tau", r.graph_count_tau},
                          {"graph_count_eta", r.graph_count_eta},
                          {"samples_agreed", r.samples_agreed},
                          {"dimension_ok", r.dimension_ok}};
}

InvariantResult invariant_result_from_json(const nlohmann::json& j) {
    InvariantResult r;
    r.value = rational_from_json(j.at("value"));
    r.graph_count_tau = j.at("graph_count_tau").get<long>();
    r.graph_count_eta = j.at("graph_count_eta").get<long>();
    r.samples_agreed = j.at("samples_agreed").get<int>();
    r.dimension_ok = j.at("dimension_ok").get<bool>();
    return r;
}

nlohmann::json graph_to_json(const HalfGraph& g) {
    nlohmann::json vertices = nlohmann::json::array();
    for (int v = 0; v < g.vertex_count(); ++v)
        vertices.push_back(nlohmann::json{{"id", v}, {"label", g.labels[v]}});
    nlohmann::json edges = nlohmann::json::array();
    for (const auto& e : g.edges)
        edges.push_back(nlohmann::json{{"a", e.a}, {"b", e.b}, {"deg", e.deg}});
    nlohmann::json marked = nlohmann::json::array();
    for (const auto& m : g.marks)
        marked.push_back(nlohmann::json{{"k", m.index}, {"vertex", m.vertex}, {"sign", m.sign}});
    return nlohmann::json{{"root", g.root},         {"d0", g.d0},   {"vertices", vertices},
                          {"edges", edges},         {"marked", marked},
                          {"aut", automorphism_order(g)}, {"D", combinatorial_denominator(g)}};
}

HalfGraph graph_from_json(const nlohmann::json& j) {
    HalfGraph g;
    g.root = j.at("root").get<int>();
    g.d0 = j.at("d0").get<int>();
    g.labels.resize(j.at("vertices").size());
    for (const auto& v : j.at("vertices")) g.labels.at(v.at("id").get<int>()) = v.at("label").get<int>();
    for (const auto& e : j.at("edges"))
        g.edges.push_back({e.at("a").get<int>(), e.at("b").get<int>(), e.at("deg").get<int>()});
    for (const auto& m : j.at("marked"))
        g.marks.push_back({m.at("k").get<int>(), m.at("vertex").get<int>(), m.at("sign").get<int>()});
    return g;
}

nlohmann::json census_to_json(const std::vector<HalfGraph>& graphs) {
    nlohmann::json out = nlohmann::json::array();
    for (const HalfGraph& g : graphs) out.push_back(graph_to_json(g));
    return out;
}

std::vector<HalfGraph> census_from_json(const nlohmann::json& j) {
    std::vector<HalfGraph> out;
    out.reserve(j.size());
    for (const auto& item : j) out.push_back(graph_from_json(item));
    return out;
}

std::string census_cache_filename(const GraphQuery& q) {
    std::ostringstream name;
    name << "census_M" << q.M << "_d" << q.d << "_l" << q.l << "_phi" << involution_name(q.phi)
         << "_c" << involution_name(q.c) << "_" << sign_mode_name(q.sign_mode) << "_v"
         << kCensusFormatVersion << ".json";
    return name.str();
}

std::vector<HalfGraph> cached_census(const GraphQuery& q, const std::string& cache_dir) {
    namespace fs = std::filesystem;
    if (q.sign_mode == SignMode::all_signs && q.l > 0) {
        // The all-signs census is the plus-only census expanded over sign
        // vectors; only the compact plus-only file goes to disk.
        GraphQuery plus = q;
        plus.sign_mode = SignMode::plus_only;
        return expand_sign_assignments(cached_census(plus, cache_dir), q.l);
    }
    fs::path path = fs::path(cache_dir) / census_cache_filename(q);
    if (fs::exists(path)) {
        try {
            std::ifstream in(path);
            nlohmann::json file = nlohmann::json::parse(in);
            std::string payload = file.at("graphs").dump();
            if (file.at("format_version").get<int>() == kCensusFormatVersion &&
                file.at("key") == key_json(q) && file.at("checksum").get<std::string>() == fnv1a64(payload)) {
                return census_from_json(file.at("graphs"));
            }
        } catch (const std::exception&) {
            // corrupt cache: fall through and regenerate
        }
    }
    std::vector<HalfGraph> graphs = half_graph_census(q);
    nlohmann::json census = census_to_json(graphs);
    nlohmann::json file{{"format_version", kCensusFormatVersion},
                        {"key", key_json(q)},
                        {"checksum", fnv1a64(census.dump())},
                        {"graphs", census}};
    fs::create_directories(path.parent_path());
    std::ofstream out(path);
    out << file.dump(1) << "\n";
    return graphs;
}

}  // namespace realgw
