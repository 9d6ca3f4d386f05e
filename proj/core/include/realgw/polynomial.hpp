#pragma once

#include <map>
#include <numeric>
#include <string>
#include <vector>

#include "realgw/rational.hpp"

namespace realgw {

/// Exponent vector; one entry per ring generator.
using Monomial = std::vector<int>;

/// Graded-lexicographic order, generator 0 most significant within a grade.
/// Arranged as a "greater" predicate so that an ordered map iterates from the
/// leading term down.
struct GrlexGreater {
    bool operator()(const Monomial& a, const Monomial& b) const {
        int da = std::accumulate(a.begin(), a.end(), 0);
        int db = std::accumulate(b.begin(), b.end(), 0);
        if (da != db) return da > db;
        return a > b;  // lexicographic tie-break
    }
};

/// Sparse multivariate polynomial over the rationals with a fixed number of
/// generators. Invariants: no stored coefficient is zero; every exponent
/// vector has length nvars().
class MultiPolynomial {
public:
    using TermMap = std::map<Monomial, Rational, GrlexGreater>;

    explicit MultiPolynomial(int nvars) : nvars_(nvars) {}
    static MultiPolynomial constant(int nvars, const Rational& c);
    static MultiPolynomial variable(int nvars, int var);  // generator var, 0-based
    static MultiPolynomial monomial(int nvars, const Monomial& m, const Rational& c);

    int nvars() const { return nvars_; }
    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const;
    /// Constant term as a Rational; requires is_constant().
    Rational constant_value() const;
    int total_degree() const;  // -1 for the zero polynomial
    int degree_in(int var) const;

    const TermMap& terms() const { return terms_; }
    Rational coefficient(const Monomial& m) const;
    const Monomial& leading_monomial() const;
    const Rational& leading_coefficient() const;

    MultiPolynomial operator-() const;
    MultiPolynomial& operator+=(const MultiPolynomial& o);
    MultiPolynomial& operator-=(const MultiPolynomial& o);
    friend MultiPolynomial operator+(MultiPolynomial a, const MultiPolynomial& b) { a += b; return a; }
    friend MultiPolynomial operator-(MultiPolynomial a, const MultiPolynomial& b) { a -= b; return a; }
    friend MultiPolynomial operator*(const MultiPolynomial& a, const MultiPolynomial& b);
    MultiPolynomial& operator*=(const MultiPolynomial& o) { return *this = *this * o; }
    MultiPolynomial& operator*=(const Rational& c);
    friend MultiPolynomial operator*(MultiPolynomial a, const Rational& c) { a *= c; return a; }

    friend bool operator==(const MultiPolynomial& a, const MultiPolynomial& b) {
        return a.nvars_ == b.nvars_ && a.terms_ == b.terms_;
    }
    friend bool operator!=(const MultiPolynomial& a, const MultiPolynomial& b) { return !(a == b); }

    Rational evaluate(const std::vector<Rational>& values) const;

    /// Ring map sending every generator g to -g; coefficients of odd-degree
    /// monomials flip sign.
    MultiPolynomial negate_generators() const;

    /// Coefficient of var^k, viewed as a polynomial in the remaining
    /// generators (the var-exponent is zeroed in the result).
    MultiPolynomial coefficient_in(int var, int k) const;

    std::string to_string(const std::vector<std::string>& names = {}) const;

private:
    void insert_term(const Monomial& m, const Rational& c);
    void check_same_ring(const MultiPolynomial& o) const;

    int nvars_;
    TermMap terms_;

    friend MultiPolynomial pow(const MultiPolynomial& p, unsigned e);
    friend MultiPolynomial divide_exact(const MultiPolynomial& a, const MultiPolynomial& b);
    friend MultiPolynomial gcd(const MultiPolynomial& a, const MultiPolynomial& b);
};

MultiPolynomial pow(const MultiPolynomial& p, unsigned e);

/// Exact quotient a/b; throws std::logic_error if b does not divide a and
/// ZeroDivide if b is zero.
MultiPolynomial divide_exact(const MultiPolynomial& a, const MultiPolynomial& b);

/// Rational content: the positive rational c such that p/c has coprime
/// integer coefficients. content(0) = 0.
Rational rational_content(const MultiPolynomial& p);

/// Greatest common divisor over Q[generators], normalized to have integer
/// coprime coefficients and positive grlex-leading coefficient. gcd(0,0) = 0.
MultiPolynomial gcd(const MultiPolynomial& a, const MultiPolynomial& b);

}  // namespace realgw
