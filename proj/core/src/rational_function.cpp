#include "realgw/rational_function.hpp"

namespace realgw {

RationalFunction::RationalFunction(MultiPolynomial num, MultiPolynomial den)
    : num_(std::move(num)), den_(std::move(den)) {
    if (num_.nvars() != den_.nvars()) throw std::invalid_argument("numerator/denominator ring mismatch");
    if (den_.is_zero()) throw ZeroDivide("rational function with zero denominator");
    canonicalize();
}

RationalFunction::RationalFunction(MultiPolynomial num)
    : num_(std::move(num)), den_(MultiPolynomial::constant(num_.nvars(), Rational(1))) {}

RationalFunction RationalFunction::constant(int nvars, const Rational& c) {
    return RationalFunction(MultiPolynomial::constant(nvars, c));
}

Rational RationalFunction::constant_value() const {
    if (!is_constant()) throw std::logic_error("constant_value on non-constant rational function");
    return num_.constant_value() / den_.constant_value();
}

void RationalFunction::canonicalize() {
    if (num_.is_zero()) {
        den_ = MultiPolynomial::constant(num_.nvars(), Rational(1));
        return;
    }
    if (!den_.is_constant()) {
        MultiPolynomial g = gcd(num_, den_);
        if (!g.is_constant()) {
            num_ = divide_exact(num_, g);
            den_ = divide_exact(den_, g);
        }
    }
    const Rational lc = den_.leading_coefficient();
    if (!lc.is_one()) {
        Rational inv = lc.reciprocal();
        num_ *= inv;
        den_ *= inv;
    }
}

RationalFunction RationalFunction::operator-() const {
    RationalFunction r = *this;
    r.num_ = -r.num_;
    return r;
}

RationalFunction operator+(const RationalFunction& a, const RationalFunction& b) {
    return RationalFunction(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
}

RationalFunction operator-(const RationalFunction& a, const RationalFunction& b) {
    return RationalFunction(a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_);
}

RationalFunction operator*(const RationalFunction& a, const RationalFunction& b) {
    return RationalFunction(a.num_ * b.num_, a.den_ * b.den_);
}

RationalFunction operator/(const RationalFunction& a, const RationalFunction& b) {
    if (b.is_zero()) throw ZeroDivide("division by zero rational function");
    return RationalFunction(a.num_ * b.den_, a.den_ * b.num_);
}

Rational RationalFunction::evaluate(const std::vector<Rational>& values) const {
    Rational d = den_.evaluate(values);
    if (d.is_zero()) throw ZeroDivide("denominator vanishes at evaluation point");
    return num_.evaluate(values) / d;
}

RationalFunction RationalFunction::negate_generators() const {
    return RationalFunction(num_.negate_generators(), den_.negate_generators());
}

std::string RationalFunction::to_string(const std::vector<std::string>& names) const {
    if (den_.is_constant() && den_.constant_value().is_one()) return num_.to_string(names);
    return "(" + num_.to_string(names) + ") / (" + den_.to_string(names) + ")";
}

RationalFunction ratfn_canonicalize(const MultiPolynomial& num, const MultiPolynomial& den) {
    return RationalFunction(num, den);
}

RationalFunction pow(const RationalFunction& f, unsigned e) {
    RationalFunction r = RationalFunction::constant(f.nvars(), Rational(1));
    RationalFunction base = f;
    while (e > 0) {
        if (e & 1u) r = r * base;
        e >>= 1u;
        if (e > 0) base = base * base;
    }
    return r;
}

}  // namespace realgw
