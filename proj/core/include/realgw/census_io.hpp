#pragma once

#include <json.hpp>

#include "realgw/graph_enum.hpp"
#include "realgw/localizer.hpp"

namespace realgw {

/// {"num": decimal string, "den": decimal string}
nlohmann::json rational_to_json(const Rational& r);
Rational rational_from_json(const nlohmann::json& j);

/// List of [exponent-vector, coefficient] pairs, leading term first.
nlohmann::json polynomial_to_json(const MultiPolynomial& p);
MultiPolynomial polynomial_from_json(const nlohmann::json& j, int nvars);

nlohmann::json invariant_result_to_json(const InvariantResult& r);
InvariantResult invariant_result_from_json(const nlohmann::json& j);

/// Census schema: one object per graph,
/// {root, d0, vertices:[{id,label}], edges:[{a,b,deg}],
///  marked:[{k,vertex,sign}], aut, D}.
nlohmann::json graph_to_json(const HalfGraph& g);
HalfGraph graph_from_json(const nlohmann::json& j);
nlohmann::json census_to_json(const std::vector<HalfGraph>& graphs);
std::vector<HalfGraph> census_from_json(const nlohmann::json& j);

/// Cache file name for a query, content-addressed by the query key and the
/// format version.
std::string census_cache_filename(const GraphQuery& q);

/// Loads the census for q from cache_dir when a valid cache file exists
/// (key, version and checksum all match); otherwise enumerates, writes the
/// cache file and returns the fresh census.
std::vector<HalfGraph> cached_census(const GraphQuery& q, const std::string& cache_dir);

}  // namespace realgw
