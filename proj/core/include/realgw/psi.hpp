#pragma once

#include <vector>

#include "realgw/rational.hpp"

namespace realgw {

/// Integral of psi_1^{a_1} ... psi_n^{a_n} over the genus-zero moduli space
/// of n-pointed stable curves (n >= 3): the multinomial coefficient
/// (n-3)! / (a_1! ... a_n!) when the exponents sum to n-3, zero otherwise.
Rational psi_integral(const std::vector<int>& exponents);

/// Integral over the n_total-pointed genus-zero moduli space of the product
/// of 1/(w_f - psi_f) over the edge flags at one vertex. Each factor is
/// expanded as a geometric series in psi and paired with psi_integral; the
/// marked points at the vertex carry exponent zero. n_total is the vertex
/// valence (edge flags + marked points), n_total >= 3.
///
/// Works over any exact field F (Rational or RationalFunction).
template <class Field>
typename Field::Scalar vertex_integral(const Field& f,
                                       const std::vector<typename Field::Scalar>& edge_flag_weights,
                                       int n_total) {
    using Scalar = typename Field::Scalar;
    const int k = static_cast<int>(edge_flag_weights.size());
    if (n_total < 3) throw std::invalid_argument("vertex integral needs valence >= 3");
    if (k < 1) throw std::invalid_argument("vertex integral needs at least one edge flag");
    for (const Scalar& w : edge_flag_weights)
        if (w == f.from_rational(Rational(0))) throw std::invalid_argument("zero flag weight");

    const int budget = n_total - 3;
    std::vector<Scalar> inv;
    inv.reserve(k);
    for (const Scalar& w : edge_flag_weights) inv.push_back(f.one() / w);

    // Sum over exponent assignments a_1 + ... + a_k = budget of
    // multinomial(budget; a) * prod_f w_f^{-(a_f + 1)}.
    Scalar total = f.from_rational(Rational(0));
    std::vector<int> a(k, 0);
    auto recurse = [&](auto&& self, int idx, int left, const Scalar& partial) -> void {
        if (idx == k - 1) {
            a[idx] = left;
            std::vector<int> full = a;
            full.resize(n_total, 0);  // marked points get exponent 0
            Rational coeff = psi_integral(full);
            Scalar term = partial;
            for (int e = 0; e <= left; ++e) term = term * inv[idx];
            total += term * f.from_rational(coeff);
            return;
        }
        Scalar scaled = partial * inv[idx];
        for (int e = 0; e <= left; ++e) {
            a[idx] = e;
            self(self, idx + 1, left - e, scaled);
            scaled = scaled * inv[idx];
        }
    };
    recurse(recurse, 0, budget, f.one());
    return total;
}

}  // namespace realgw
