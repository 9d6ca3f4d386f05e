#pragma once

#include <string>
#include <vector>

#include "realgw/localizer.hpp"

namespace realgw::verify {

struct CriterionResult {
    int id = 0;
    std::string name;
    bool pass = false;
    std::string details;
    double seconds = 0.0;
};

struct Options {
    std::string census_cache_dir;  // used by the long-running census criteria when set
};

/// Runs every acceptance criterion; one result per criterion, in order.
std::vector<CriterionResult> run_acceptance(const Options& opts = {});

bool all_passed(const std::vector<CriterionResult>& results);

/// "PASS criterion  3: ..." / "FAIL criterion  3: ..." line.
std::string render_line(const CriterionResult& r);

}  // namespace realgw::verify
