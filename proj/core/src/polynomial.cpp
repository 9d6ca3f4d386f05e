#include "realgw/polynomial.hpp"

#include <sstream>
#include <stdexcept>

namespace realgw {

MultiPolynomial MultiPolynomial::constant(int nvars, const Rational& c) {
    MultiPolynomial p(nvars);
    if (!c.is_zero()) p.terms_.emplace(Monomial(nvars, 0), c);
    return p;
}

MultiPolynomial MultiPolynomial::variable(int nvars, int var) {
    if (var < 0 || var >= nvars) throw std::invalid_argument("generator index out of range");
    Monomial m(nvars, 0);
    m[var] = 1;
    return monomial(nvars, m, Rational(1));
}

MultiPolynomial MultiPolynomial::monomial(int nvars, const Monomial& m, const Rational& c) {
    if (static_cast<int>(m.size()) != nvars) throw std::invalid_argument("exponent vector length mismatch");
    MultiPolynomial p(nvars);
    if (!c.is_zero()) p.terms_.emplace(m, c);
    return p;
}

bool MultiPolynomial::is_constant() const {
    return terms_.empty() || (terms_.size() == 1 && total_degree() == 0);
}

Rational MultiPolynomial::constant_value() const {
    if (is_zero()) return Rational(0);
    if (!is_constant()) throw std::logic_error("constant_value on non-constant polynomial");
    return terms_.begin()->second;
}

int MultiPolynomial::total_degree() const {
    if (is_zero()) return -1;
    const Monomial& m = terms_.begin()->first;  // leading term has max grade
    return std::accumulate(m.begin(), m.end(), 0);
}

int MultiPolynomial::degree_in(int var) const {
    int d = 0;
    for (const auto& [m, c] : terms_) d = std::max(d, m[var]);
    return is_zero() ? -1 : d;
}

Rational MultiPolynomial::coefficient(const Monomial& m) const {
    auto it = terms_.find(m);
    return it == terms_.end() ? Rational(0) : it->second;
}

const Monomial& MultiPolynomial::leading_monomial() const {
    if (is_zero()) throw std::logic_error("leading_monomial of zero polynomial");
    return terms_.begin()->first;
}

const Rational& MultiPolynomial::leading_coefficient() const {
    if (is_zero()) throw std::logic_error("leading_coefficient of zero polynomial");
    return terms_.begin()->second;
}

void MultiPolynomial::insert_term(const Monomial& m, const Rational& c) {
    if (c.is_zero()) return;
    auto [it, fresh] = terms_.emplace(m, c);
    if (!fresh) {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

void MultiPolynomial::check_same_ring(const MultiPolynomial& o) const {
    if (nvars_ != o.nvars_) throw std::invalid_argument("polynomials over different variable lists");
}

MultiPolynomial MultiPolynomial::operator-() const {
    MultiPolynomial r(nvars_);
    for (const auto& [m, c] : terms_) r.terms_.emplace(m, -c);
    return r;
}

MultiPolynomial& MultiPolynomial::operator+=(const MultiPolynomial& o) {
    check_same_ring(o);
    for (const auto& [m, c] : o.terms_) insert_term(m, c);
    return *this;
}

MultiPolynomial& MultiPolynomial::operator-=(const MultiPolynomial& o) {
    check_same_ring(o);
    for (const auto& [m, c] : o.terms_) insert_term(m, -c);
    return *this;
}

MultiPolynomial operator*(const MultiPolynomial& a, const MultiPolynomial& b) {
    a.check_same_ring(b);
    MultiPolynomial r(a.nvars_);
    Monomial m(a.nvars_, 0);
    for (const auto& [ma, ca] : a.terms_) {
        for (const auto& [mb, cb] : b.terms_) {
            for (int i = 0; i < a.nvars_; ++i) m[i] = ma[i] + mb[i];
            r.insert_term(m, ca * cb);
        }
    }
    return r;
}

MultiPolynomial& MultiPolynomial::operator*=(const Rational& c) {
    if (c.is_zero()) {
        terms_.clear();
        return *this;
    }
    for (auto& [m, coeff] : terms_) coeff *= c;
    return *this;
}

Rational MultiPolynomial::evaluate(const std::vector<Rational>& values) const {
    if (static_cast<int>(values.size()) != nvars_) throw std::invalid_argument("evaluation point arity mismatch");
    Rational sum(0);
    for (const auto& [m, c] : terms_) {
        Rational t = c;
        for (int i = 0; i < nvars_; ++i)
            if (m[i] > 0) t *= pow(values[i], static_cast<unsigned>(m[i]));
        sum += t;
    }
    return sum;
}

MultiPolynomial MultiPolynomial::negate_generators() const {
    MultiPolynomial r(nvars_);
    for (const auto& [m, c] : terms_) {
        int deg = std::accumulate(m.begin(), m.end(), 0);
        r.terms_.emplace(m, (deg % 2 == 0) ? c : -c);
    }
    return r;
}

MultiPolynomial MultiPolynomial::coefficient_in(int var, int k) const {
    MultiPolynomial r(nvars_);
    for (const auto& [m, c] : terms_) {
        if (m[var] != k) continue;
        Monomial stripped = m;
        stripped[var] = 0;
        r.terms_.emplace(stripped, c);
    }
    return r;
}

std::string MultiPolynomial::to_string(const std::vector<std::string>& names) const {
    if (is_zero()) return "0";
    std::ostringstream out;
    bool first = true;
    for (const auto& [m, c] : terms_) {
        if (!first) out << (c.sign() >= 0 ? " + " : " - ");
        else if (c.sign() < 0) out << "-";
        first = false;
        Rational ac = c.abs();
        bool has_vars = std::accumulate(m.begin(), m.end(), 0) > 0;
        if (!ac.is_one() || !has_vars) out << ac.to_string();
        bool sep = !ac.is_one() || !has_vars;
        for (int i = 0; i < nvars_; ++i) {
            if (m[i] == 0) continue;
            if (sep) out << "*";
            sep = true;
            if (static_cast<int>(names.size()) > i) out << names[i];
            else out << "x" << i + 1;
            if (m[i] > 1) out << "^" << m[i];
        }
    }
    return out.str();
}

MultiPolynomial pow(const MultiPolynomial& p, unsigned e) {
    MultiPolynomial r = MultiPolynomial::constant(p.nvars(), Rational(1));
    MultiPolynomial base = p;
    while (e > 0) {
        if (e & 1u) r = r * base;
        e >>= 1u;
        if (e > 0) base = base * base;
    }
    return r;
}

MultiPolynomial divide_exact(const MultiPolynomial& a, const MultiPolynomial& b) {
    a.check_same_ring(b);
    if (b.is_zero()) throw ZeroDivide("polynomial division by zero");
    MultiPolynomial q(a.nvars());
    MultiPolynomial rem = a;
    const Monomial& lb = b.leading_monomial();
    const Rational& cb = b.leading_coefficient();
    Monomial qm(a.nvars(), 0);
    while (!rem.is_zero()) {
        const Monomial& lr = rem.leading_monomial();
        bool divisible = true;
        for (int i = 0; i < a.nvars(); ++i) {
            qm[i] = lr[i] - lb[i];
            if (qm[i] < 0) { divisible = false; break; }
        }
        if (!divisible) throw std::logic_error("divide_exact: inexact division");
        MultiPolynomial t = MultiPolynomial::monomial(a.nvars(), qm, rem.leading_coefficient() / cb);
        q += t;
        rem -= t * b;
    }
    return q;
}

Rational rational_content(const MultiPolynomial& p) {
    if (p.is_zero()) return Rational(0);
    mpz_class num_gcd(0), den_lcm(1);
    for (const auto& [m, c] : p.terms()) {
        mpz_gcd(num_gcd.get_mpz_t(), num_gcd.get_mpz_t(), c.numerator().get_mpz_t());
        mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), c.denominator().get_mpz_t());
    }
    return Rational(num_gcd, den_lcm);
}

namespace {

// Primitive part with positive leading coefficient; assumes p nonzero.
MultiPolynomial primitive_part(const MultiPolynomial& p) {
    Rational c = rational_content(p);
    if (p.leading_coefficient().sign() < 0) c = -c;
    MultiPolynomial r = p;
    r *= c.reciprocal();
    return r;
}

// Highest-index generator actually present in p, or -1.
int top_variable(const MultiPolynomial& p) {
    int top = -1;
    for (const auto& [m, c] : p.terms())
        for (int i = p.nvars() - 1; i > top; --i)
            if (m[i] > 0) { top = i; break; }
    return top;
}

MultiPolynomial gcd_impl(MultiPolynomial a, MultiPolynomial b);

// Content of p viewed as a univariate polynomial in `var` over the subring of
// the remaining generators: the gcd of the coefficient polynomials.
MultiPolynomial content_in(const MultiPolynomial& p, int var) {
    MultiPolynomial c(p.nvars());
    for (int k = 0; k <= p.degree_in(var); ++k) {
        MultiPolynomial coeff = p.coefficient_in(var, k);
        if (coeff.is_zero()) continue;
        c = c.is_zero() ? primitive_part(coeff) : gcd_impl(c, coeff);
        if (c.is_constant()) break;  // gcd can only shrink
    }
    return c;
}

// Pseudo-remainder of a by b with respect to `var` (multiply-through
// variant); deg_var(result) < deg_var(b).
MultiPolynomial pseudo_remainder(MultiPolynomial a, const MultiPolynomial& b, int var) {
    int db = b.degree_in(var);
    MultiPolynomial lcb = b.coefficient_in(var, db);
    while (!a.is_zero() && a.degree_in(var) >= db) {
        int da = a.degree_in(var);
        MultiPolynomial lca = a.coefficient_in(var, da);
        Monomial shift(a.nvars(), 0);
        shift[var] = da - db;
        MultiPolynomial xs = MultiPolynomial::monomial(a.nvars(), shift, Rational(1));
        a = a * lcb - b * (lca * xs);
        if (!a.is_zero()) a = primitive_part(a);  // tame coefficient growth
    }
    return a;
}

// Largest monomial dividing every term of both arguments (computed when one
// side is a single term; the coefficient is a unit over Q).
MultiPolynomial monomial_gcd(const MultiPolynomial& mono, const MultiPolynomial& other) {
    Monomial e = mono.leading_monomial();
    for (const auto& [m, c] : other.terms())
        for (int i = 0; i < mono.nvars(); ++i) e[i] = std::min(e[i], m[i]);
    return MultiPolynomial::monomial(mono.nvars(), e, Rational(1));
}

MultiPolynomial gcd_impl(MultiPolynomial a, MultiPolynomial b) {
    if (a.is_zero()) return b.is_zero() ? b : primitive_part(b);
    if (b.is_zero()) return primitive_part(a);
    if (a.terms().size() == 1) return monomial_gcd(a, b);
    if (b.terms().size() == 1) return monomial_gcd(b, a);
    a = primitive_part(a);
    b = primitive_part(b);
    int var = std::max(top_variable(a), top_variable(b));
    if (var < 0) return MultiPolynomial::constant(a.nvars(), Rational(1));  // both constants
    if (a.degree_in(var) < 1 || b.degree_in(var) < 1) {
        // One side is free of the top variable: gcd divides that side's
        // content in the lower subring.
        const MultiPolynomial& flat = a.degree_in(var) < 1 ? a : b;
        const MultiPolynomial& tall = a.degree_in(var) < 1 ? b : a;
        return gcd_impl(flat, content_in(tall, var));
    }
    MultiPolynomial ca = content_in(a, var);
    MultiPolynomial cb = content_in(b, var);
    MultiPolynomial pa = divide_exact(a, ca);
    MultiPolynomial pb = divide_exact(b, cb);
    // Euclidean pseudo-remainder sequence in the top variable.
    while (!pb.is_zero()) {
        MultiPolynomial r = pseudo_remainder(pa, pb, var);
        pa = pb;
        pb = r;
    }
    MultiPolynomial pp = divide_exact(pa, content_in(pa, var));
    return primitive_part(gcd_impl(ca, cb) * pp);
}

}  // namespace

MultiPolynomial gcd(const MultiPolynomial& a, const MultiPolynomial& b) {
    a.check_same_ring(b);
    return gcd_impl(a, b);
}

}  // namespace realgw
