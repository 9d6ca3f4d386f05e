#pragma once

#include "realgw/polynomial.hpp"

namespace realgw {

/// Quotient of MultiPolynomials kept in canonical form: gcd(num, den) = 1 and
/// the denominator's grlex-leading coefficient is 1. Two rational functions
/// are equal as field elements iff their canonical representations match.
class RationalFunction {
public:
    explicit RationalFunction(int nvars)
        : num_(nvars), den_(MultiPolynomial::constant(nvars, Rational(1))) {}
    RationalFunction(MultiPolynomial num, MultiPolynomial den);
    explicit RationalFunction(MultiPolynomial num);
    static RationalFunction constant(int nvars, const Rational& c);

    const MultiPolynomial& numerator() const { return num_; }
    const MultiPolynomial& denominator() const { return den_; }
    int nvars() const { return num_.nvars(); }

    bool is_zero() const { return num_.is_zero(); }
    bool is_constant() const { return num_.is_constant() && den_.is_constant(); }
    Rational constant_value() const;

    RationalFunction operator-() const;
    friend RationalFunction operator+(const RationalFunction& a, const RationalFunction& b);
    friend RationalFunction operator-(const RationalFunction& a, const RationalFunction& b);
    friend RationalFunction operator*(const RationalFunction& a, const RationalFunction& b);
    friend RationalFunction operator/(const RationalFunction& a, const RationalFunction& b);
    RationalFunction& operator+=(const RationalFunction& o) { return *this = *this + o; }
    RationalFunction& operator-=(const RationalFunction& o) { return *this = *this - o; }
    RationalFunction& operator*=(const RationalFunction& o) { return *this = *this * o; }
    RationalFunction& operator/=(const RationalFunction& o) { return *this = *this / o; }

    friend bool operator==(const RationalFunction& a, const RationalFunction& b) {
        return a.num_ == b.num_ && a.den_ == b.den_;
    }
    friend bool operator!=(const RationalFunction& a, const RationalFunction& b) { return !(a == b); }

    /// Exact evaluation; throws ZeroDivide when the denominator vanishes at
    /// the point (resample signal).
    Rational evaluate(const std::vector<Rational>& values) const;

    RationalFunction negate_generators() const;

    std::string to_string(const std::vector<std::string>& names = {}) const;

private:
    void canonicalize();

    MultiPolynomial num_, den_;
};

/// Canonical quotient num/den; throws ZeroDivide when den is the zero
/// polynomial.
RationalFunction ratfn_canonicalize(const MultiPolynomial& num, const MultiPolynomial& den);

RationalFunction pow(const RationalFunction& f, unsigned e);

}  // namespace realgw
