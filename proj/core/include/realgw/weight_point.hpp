#pragma once

#include <vector>

#include "realgw/rational.hpp"

namespace realgw {

/// A specialization point for the free torus weights: one rational value per
/// generator. Points produced by sample_weight_point satisfy the genericity
/// invariants (all values nonzero, pairwise distinct absolute values), which
/// guarantee that no weight linear form lambda_i - lambda_j (i != j) or
/// 2*lambda_i vanishes.
struct WeightPoint {
    std::vector<Rational> values;

    int size() const { return static_cast<int>(values.size()); }
};

/// True iff the genericity invariants hold.
bool weight_point_is_generic(const WeightPoint& p);

/// Deterministic generic point: distinct integers in [2, 2000], one per
/// generator, drawn from a fixed PRNG stream seeded by `seed` with rejection
/// of repeated magnitudes.
WeightPoint sample_weight_point(int M, long seed);

}  // namespace realgw
