#pragma once

#include "dfc/poly.hpp"
#include "dfc/rational.hpp"

#include <utility>
#include <vector>

namespace dfc {

/// Polynomial on the Chebyshev basis: f(x) = sum_n u_n T_n(x), exact rational u_n.
/// Trailing zero coefficients are removed after every operation ("compress");
/// the zero polynomial is stored as the single coefficient 0 and has degree 0.
class ChebPoly {
public:
    ChebPoly() : u_{Rational(0)} {}
    explicit ChebPoly(std::vector<Rational> u);

    /// The single basis polynomial c * T_n.
    static ChebPoly basis(int n, const Rational& c = 1);

    int degree() const { return static_cast<int>(u_.size()) - 1; }
    bool is_zero() const { return u_.size() == 1 && u_[0] == 0; }
    const std::vector<Rational>& coeffs() const { return u_; }
    Rational coeff(int n) const;

    ChebPoly operator-() const;
    ChebPoly& operator+=(const ChebPoly& o);
    ChebPoly& operator-=(const ChebPoly& o);
    ChebPoly& operator*=(const Rational& c);
    friend ChebPoly operator+(ChebPoly a, const ChebPoly& b) { return a += b; }
    friend ChebPoly operator-(ChebPoly a, const ChebPoly& b) { return a -= b; }
    friend ChebPoly operator*(ChebPoly a, const Rational& c) { return a *= c; }
    friend ChebPoly operator*(const Rational& c, ChebPoly a) { return a *= c; }
    friend bool operator==(const ChebPoly& a, const ChebPoly& b) { return a.u_ == b.u_; }
    friend bool operator!=(const ChebPoly& a, const ChebPoly& b) { return !(a == b); }

private:
    void compress();
    std::vector<Rational> u_;
};

/// Clenshaw evaluation, exact.
Rational eval(const ChebPoly& p, const Rational& x);

ChebPoly mul(const ChebPoly& a, const ChebPoly& b);
inline ChebPoly operator*(const ChebPoly& a, const ChebPoly& b) { return mul(a, b); }

/// a = b q + r with deg r < deg b (r = 0 when deg b = 0). Throws DomainError if b = 0.
std::pair<ChebPoly, ChebPoly> divrem(const ChebPoly& a, const ChebPoly& b);

/// F with F' = f and F(0) = 0.
ChebPoly antiderivative(const ChebPoly& f);
ChebPoly derivative(const ChebPoly& f);
ChebPoly derivative(const ChebPoly& f, int k);

/// sum_n |u_n|, an upper bound on the sup norm over [-1, 1].
Rational norm_upper(const ChebPoly& f);

ChebPoly truncate(const ChebPoly& f, int d);

/// Monomial coefficients, low degree first.
std::vector<Rational> to_monomial(const ChebPoly& f);
ChebPoly from_monomial(const std::vector<Rational>& a);
inline Poly to_poly(const ChebPoly& f) { return Poly(to_monomial(f)); }
inline ChebPoly from_poly(const Poly& p) { return from_monomial(p.coeffs()); }

/// Symmetric convention c_0..c_d with c_{-n} = c_n: u_0 = c_0, u_n = 2 c_n.
std::vector<Rational> to_symmetric(const ChebPoly& f);
ChebPoly from_symmetric(const std::vector<Rational>& c);

/// Value of T_n^{(k)}(x) for n = 0..count-1.
std::vector<Rational> chebyshev_derivative_values(const Rational& x, int k, int count);

} // namespace dfc
