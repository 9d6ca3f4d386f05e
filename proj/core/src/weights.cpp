#include "realgw/weights.hpp"

#include <stdexcept>

namespace realgw {

WeightSystem::WeightSystem(int M) : M_(M) {
    if (M < 1) throw std::invalid_argument("torus rank must be positive");
}

void WeightSystem::check_index(int i) const {
    if (i < 1 || i > 2 * M_) throw std::out_of_range("fixed-point index out of range");
}

int WeightSystem::generator_of(int i) const {
    check_index(i);
    return (i - 1) / 2;
}

int WeightSystem::sign_of(int i) const {
    check_index(i);
    return (i % 2 == 1) ? 1 : -1;
}

MultiPolynomial WeightSystem::lambda(int i) const {
    MultiPolynomial g = MultiPolynomial::variable(M_, generator_of(i));
    return sign_of(i) == 1 ? g : -g;
}

Rational WeightSystem::lambda_at(const WeightPoint& p, int i) const {
    if (p.size() != M_) throw std::invalid_argument("weight point arity mismatch");
    const Rational& v = p.values[generator_of(i)];
    return sign_of(i) == 1 ? v : -v;
}

MultiPolynomial WeightSystem::vertex_euler(int i) const {
    check_index(i);
    MultiPolynomial prod = MultiPolynomial::constant(M_, Rational(1));
    MultiPolynomial li = lambda(i);
    for (int j = 1; j <= 2 * M_; ++j) {
        if (j == i) continue;
        prod *= li - lambda(j);
    }
    return prod;
}

Rational WeightSystem::vertex_euler_at(const WeightPoint& p, int i) const {
    check_index(i);
    Rational prod(1);
    Rational li = lambda_at(p, i);
    for (int j = 1; j <= 2 * M_; ++j) {
        if (j == i) continue;
        prod *= li - lambda_at(p, j);
    }
    return prod;
}

std::vector<std::string> WeightSystem::generator_names() const {
    std::vector<std::string> names;
    names.reserve(M_);
    for (int g = 0; g < M_; ++g) names.push_back("L" + std::to_string(2 * g + 1));
    return names;
}

RationalFunction flag_weight(const WeightSystem& ws, const Flag& f) {
    if (f.vertex_label == f.other_label) throw std::invalid_argument("flag endpoints must differ");
    MultiPolynomial num = ws.lambda(f.vertex_label) - ws.lambda(f.other_label);
    return RationalFunction(num, MultiPolynomial::constant(ws.M(), Rational(f.degree)));
}

Rational flag_weight_at(const WeightSystem& ws, const WeightPoint& p, const Flag& f) {
    if (f.vertex_label == f.other_label) throw std::invalid_argument("flag endpoints must differ");
    return (ws.lambda_at(p, f.vertex_label) - ws.lambda_at(p, f.other_label)) / Rational(f.degree);
}

}  // namespace realgw
