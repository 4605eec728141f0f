#pragma once

#include "dfc/rational.hpp"

#include <initializer_list>
#include <string>
#include <utility>
#include <vector>

namespace dfc {

/// Dense univariate polynomial over Q in the monomial basis, low degree first.
/// Always stored without trailing zeros; the zero polynomial has no coefficients.
class Poly {
public:
    Poly() = default;
    explicit Poly(std::vector<Rational> c);
    Poly(std::initializer_list<Rational> c);

    static Poly constant(const Rational& c);
    static Poly monomial(int k, const Rational& c = 1);
    static Poly x() { return monomial(1); }

    /// Degree of the polynomial; -1 for zero.
    int degree() const { return static_cast<int>(c_.size()) - 1; }
    bool is_zero() const { return c_.empty(); }
    const std::vector<Rational>& coeffs() const { return c_; }
    Rational coeff(int i) const;
    const Rational& lc() const;

    Rational eval(const Rational& x) const;
    Poly derivative() const;
    Poly derivative(int k) const;
    /// p(x + h)
    Poly shift(const Rational& h) const;
    /// p(c * x)
    Poly scale_arg(const Rational& c) const;
    /// p(q(x))
    Poly compose(const Poly& q) const;

    Poly operator-() const;
    Poly& operator+=(const Poly& o);
    Poly& operator-=(const Poly& o);
    Poly& operator*=(const Poly& o);
    Poly& operator*=(const Rational& c);
    Poly& operator/=(const Rational& c);

    friend Poly operator+(Poly a, const Poly& b) { return a += b; }
    friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
    friend Poly operator*(const Poly& a, const Poly& b);
    friend Poly operator*(Poly a, const Rational& c) { return a *= c; }
    friend Poly operator*(const Rational& c, Poly a) { return a *= c; }
    friend Poly operator/(Poly a, const Rational& c) { return a /= c; }
    friend bool operator==(const Poly& a, const Poly& b) { return a.c_ == b.c_; }
    friend bool operator!=(const Poly& a, const Poly& b) { return !(a == b); }

    Poly monic() const;
    /// Content-free polynomial with integer coefficients and positive leading coefficient.
    Poly primitive() const;

    std::string to_string(const char* var = "x") const;

private:
    void trim();
    std::vector<Rational> c_;
};

/// Euclidean division: a = b q + r with deg r < deg b. Throws DomainError if b = 0.
std::pair<Poly, Poly> divrem(const Poly& a, const Poly& b);

/// Monic gcd (zero if both are zero).
Poly gcd(const Poly& a, const Poly& b);

/// Extended Euclid: returns (g, u, v) with u a + v b = g, g monic.
struct ExtendedGcd {
    Poly g, u, v;
};
ExtendedGcd extended_gcd(const Poly& a, const Poly& b);

/// Squarefree factorization (Yun): p = c * f_1 f_2^2 ... f_k^k with monic squarefree f_i.
/// Entry i-1 holds f_i (possibly 1).
std::vector<Poly> squarefree_factorization(const Poly& p);

/// Number of distinct real roots in the closed interval [a, b].
int count_real_roots(const Poly& p, const Rational& a, const Rational& b);

/// Disjoint isolating intervals [lo, hi] for the distinct real roots of p,
/// each of width at most `width` (an exact root is returned as [r, r]).
std::vector<std::pair<Rational, Rational>> isolate_real_roots(const Poly& p,
                                                              const Rational& width = 1);

/// All integer roots of p in increasing order. p must be nonzero.
std::vector<Integer> integer_roots(const Poly& p);

/// Cauchy-type bound: every complex root z of p satisfies |z| <= bound.
Rational root_bound(const Poly& p);

} // namespace dfc
