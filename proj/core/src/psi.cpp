#include "realgw/psi.hpp"

#include <numeric>
#include <stdexcept>

namespace realgw {

Rational psi_integral(const std::vector<int>& exponents) {
    const int n = static_cast<int>(exponents.size());
    if (n < 3) throw std::invalid_argument("genus-zero moduli need at least three points");
    long sum = 0;
    for (int a : exponents) {
        if (a < 0) throw std::invalid_argument("negative psi exponent");
        sum += a;
    }
    if (sum != n - 3) return Rational(0);
    Rational r = factorial(static_cast<unsigned>(n - 3));
    for (int a : exponents)
        if (a > 1) r /= factorial(static_cast<unsigned>(a));
    return r;
}

}  // namespace realgw
