#include "realgw/euler_class.hpp"

namespace realgw {

namespace testhooks {
std::atomic<bool> flip_edge_sign{false};
}  // namespace testhooks

LocusContribution locus_contribution(const HalfGraph& g, const std::vector<int>& t,
                                     const WeightSystem& ws, const ParityMode& mode,
                                     const std::optional<WeightPoint>& point) {
    if (point) {
        NumericField f{ws, *point};
        return LocusContribution{g, locus_value(f, g, t, mode)};
    }
    SymbolicField f{ws};
    return LocusContribution{g, locus_value(f, g, t, mode)};
}

}  // namespace realgw
