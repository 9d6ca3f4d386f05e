#include "realgw/weight_point.hpp"

#include <random>
#include <set>
#include <stdexcept>

namespace realgw {

bool weight_point_is_generic(const WeightPoint& p) {
    std::set<Rational> magnitudes;
    for (const Rational& v : p.values) {
        if (v.is_zero()) return false;
        if (!magnitudes.insert(v.abs()).second) return false;
    }
    return true;
}

WeightPoint sample_weight_point(int M, long seed) {
    if (M < 1) throw std::invalid_argument("weight point needs at least one generator");
    if (M > 1900) throw std::invalid_argument("generator count exceeds sampling range");
    std::mt19937_64 rng(static_cast<std::uint64_t>(seed));
    std::set<long> used;
    WeightPoint p;
    p.values.reserve(M);
    while (static_cast<int>(p.values.size()) < M) {
        long v = 2 + static_cast<long>(rng() % 1999u);  // [2, 2000]
        if (!used.insert(v).second) continue;
        p.values.emplace_back(v);
    }
    return p;
}

}  // namespace realgw
