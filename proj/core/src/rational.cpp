#include "realgw/rational.hpp"

namespace realgw {

Rational::Rational(long n, long d) {
    if (d == 0) throw ZeroDivide("rational with zero denominator");
    v_ = mpq_class(n, d);
    v_.canonicalize();
}

Rational::Rational(const mpz_class& n, const mpz_class& d) {
    if (d == 0) throw ZeroDivide("rational with zero denominator");
    v_ = mpq_class(n) / mpq_class(d);  // mpq_class division canonicalizes
}

Rational::Rational(mpq_class q) : v_(std::move(q)) {
    if (v_.get_den() == 0) throw ZeroDivide("rational with zero denominator");
    v_.canonicalize();
}

Rational Rational::from_string(const std::string& s) {
    auto slash = s.find('/');
    if (slash == std::string::npos) return from_strings(s, "1");
    return from_strings(s.substr(0, slash), s.substr(slash + 1));
}

Rational Rational::from_strings(const std::string& num, const std::string& den) {
    mpz_class n, d;
    if (n.set_str(num, 10) != 0) throw std::invalid_argument("bad integer literal: " + num);
    if (d.set_str(den, 10) != 0) throw std::invalid_argument("bad integer literal: " + den);
    return Rational(n, d);
}

Rational& Rational::operator/=(const Rational& o) {
    if (o.is_zero()) throw ZeroDivide("division by zero rational");
    v_ /= o.v_;
    return *this;
}

Rational Rational::reciprocal() const {
    if (is_zero()) throw ZeroDivide("reciprocal of zero");
    return Rational(mpq_class(1) / v_);
}

std::string Rational::to_string() const {
    if (is_integer()) return numerator_string();
    return numerator_string() + "/" + denominator_string();
}

Rational rat_normalize(long n, long d) { return Rational(n, d); }

Rational rat_normalize(const mpz_class& n, const mpz_class& d) { return Rational(n, d); }

Rational pow(const Rational& x, unsigned e) {
    mpz_class num, den;
    mpz_pow_ui(num.get_mpz_t(), x.numerator().get_mpz_t(), e);
    mpz_pow_ui(den.get_mpz_t(), x.denominator().get_mpz_t(), e);
    return Rational(num, den);
}

Rational factorial(unsigned n) {
    mpz_class f;
    mpz_fac_ui(f.get_mpz_t(), n);
    return Rational(f, 1);
}

}  // namespace realgw
