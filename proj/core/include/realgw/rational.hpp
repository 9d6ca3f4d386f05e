#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <stdexcept>
#include <string>

namespace realgw {

/// Thrown when an exact division hits a zero divisor. During specialized
/// (weight-point) evaluation this is the "resample needed" signal: the caller
/// draws a fresh generic point instead of failing.
class ZeroDivide : public std::domain_error {
public:
    explicit ZeroDivide(const std::string& what) : std::domain_error(what) {}
};

/// Arbitrary-precision rational number, always stored in canonical form:
/// denominator > 0, gcd(|num|, den) = 1, zero is 0/1.
class Rational {
public:
    Rational() : v_(0) {}
    Rational(long n) : v_(static_cast<signed long>(n)) {}  // NOLINT: implicit by design
    Rational(long n, long d);
    Rational(const mpz_class& n, const mpz_class& d);
    explicit Rational(mpq_class q);

    /// Parses "n", "-n" or "n/d". Rejects d = 0.
    static Rational from_string(const std::string& s);
    static Rational from_strings(const std::string& num, const std::string& den);

    const mpq_class& raw() const { return v_; }
    mpz_class numerator() const { return v_.get_num(); }
    mpz_class denominator() const { return v_.get_den(); }
    std::string numerator_string() const { return v_.get_num().get_str(); }
    std::string denominator_string() const { return v_.get_den().get_str(); }

    bool is_zero() const { return sgn(v_) == 0; }
    bool is_one() const { return v_ == 1; }
    bool is_integer() const { return v_.get_den() == 1; }
    int sign() const { return sgn(v_); }

    Rational operator-() const { return Rational(mpq_class(-v_)); }
    Rational& operator+=(const Rational& o) { v_ += o.v_; return *this; }
    Rational& operator-=(const Rational& o) { v_ -= o.v_; return *this; }
    Rational& operator*=(const Rational& o) { v_ *= o.v_; return *this; }
    Rational& operator/=(const Rational& o);

    friend Rational operator+(Rational a, const Rational& b) { a += b; return a; }
    friend Rational operator-(Rational a, const Rational& b) { a -= b; return a; }
    friend Rational operator*(Rational a, const Rational& b) { a *= b; return a; }
    friend Rational operator/(Rational a, const Rational& b) { a /= b; return a; }

    friend bool operator==(const Rational& a, const Rational& b) { return a.v_ == b.v_; }
    friend bool operator!=(const Rational& a, const Rational& b) { return a.v_ != b.v_; }
    friend bool operator<(const Rational& a, const Rational& b) { return a.v_ < b.v_; }
    friend bool operator>(const Rational& a, const Rational& b) { return a.v_ > b.v_; }

    Rational abs() const { return Rational(mpq_class(::abs(v_))); }
    Rational reciprocal() const;

    /// "n/d", or just "n" when the denominator is 1.
    std::string to_string() const;

private:
    mpq_class v_;  // kept canonical by mpq semantics + explicit canonicalization
};

/// Canonical reduced form of n/d with positive denominator. Rejects d = 0.
Rational rat_normalize(long n, long d);
Rational rat_normalize(const mpz_class& n, const mpz_class& d);

/// x^e for e >= 0 (0^0 = 1).
Rational pow(const Rational& x, unsigned e);

/// n! as an exact rational (integer).
Rational factorial(unsigned n);

}  // namespace realgw
