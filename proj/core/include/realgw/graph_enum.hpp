#pragma once

#include <functional>

#include "realgw/half_graph.hpp"

namespace realgw {

enum class SignMode { all_signs, plus_only };

std::string sign_mode_name(SignMode m);

struct GraphQuery {
    int M = 1;
    int d = 1;
    int l = 0;
    Involution phi = Involution::tau;  // ambient involution
    Involution c = Involution::tau;    // domain involution class of the locus
    SignMode sign_mode = SignMode::all_signs;
};

/// True iff loci of class c can exist for (phi, d0): |phi| + |c| * d0 even.
bool parity_admissible(Involution phi, Involution c, int d0);

/// Streams every isomorphism class of admissible decorated half-graph exactly
/// once, in a deterministic canonical order. The half-edge degree d0 runs
/// over d, d-2, ..., 1; root labels over all 2M fixed-point indices. An
/// inadmissible parity combination yields an empty stream.
void enumerate_half_graphs(const GraphQuery& q, const std::function<void(const HalfGraph&)>& sink);

/// Convenience wrapper collecting the stream.
std::vector<HalfGraph> half_graph_census(const GraphQuery& q);

/// Expands an all-plus census over every sign vector on l marked points.
/// Signs are rigid decorations on distinguishable points, so the result is
/// exactly the all-signs census (canonically ordered).
std::vector<HalfGraph> expand_sign_assignments(const std::vector<HalfGraph>& plus_census, int l);

}  // namespace realgw
