#pragma once

// High-precision reference values computed independently of the library's
// exact pipeline: MPFR floating point, closed forms and series.

#include "dfc/dfc.hpp"

#include <boost/multiprecision/mpfr.hpp>

#include <functional>
#include <vector>

namespace ref {

namespace mp = boost::multiprecision;
using Real = mp::number<mp::mpfr_float_backend<250>, mp::et_off>;
using dfc::Rational;

inline Real real(const Rational& q) {
    Real r;
    mpfr_set_q(r.backend().data(), q.get_mpq_t(), MPFR_RNDN);
    return r;
}

/// p/q in lowest terms (the two-argument gmpxx constructor does not reduce).
inline Rational frac(long p, long q = 1) {
    Rational r(p, q);
    r.canonicalize();
    return r;
}

/// sum_n u_n T_n(x) by Clenshaw's recurrence.
inline Real clenshaw(const std::vector<Rational>& u, const Real& x) {
    Real b1 = 0, b2 = 0;
    for (size_t n = u.size(); n-- > 1;) {
        Real b0 = 2 * x * b1 - b2 + real(u[n]);
        b2 = b1;
        b1 = b0;
    }
    return x * b1 - b2 + (u.empty() ? Real(0) : real(u[0]));
}

inline Real clenshaw(const dfc::ChebPoly& p, const Real& x) { return clenshaw(p.coeffs(), x); }

inline Real horner(const dfc::Poly& p, const Real& x) {
    Real v = 0;
    const auto& c = p.coeffs();
    for (size_t i = c.size(); i-- > 0;) v = v * x + real(c[i]);
    return v;
}

/// The 2001 nodes -1 + k/1000, k = 0..2000.
inline std::vector<Real> sample_nodes(int count = 2001) {
    std::vector<Real> xs;
    for (int k = 0; k < count; ++k) xs.push_back(real(frac(2 * k, count - 1) - 1));
    return xs;
}

/// max |p(x) - f(x)| over the sample nodes.
inline Real sampled_error(const dfc::ChebPoly& p, const std::function<Real(const Real&)>& f, int count = 2001) {
    Real m = 0;
    for (const auto& x : sample_nodes(count)) {
        Real e = mp::abs(clenshaw(p, x) - f(x));
        if (e > m) m = e;
    }
    return m;
}

// closed-form solutions of the three benchmark problems
inline Real amm1(const Real& x) { return mp::exp(x / 2) / mp::sqrt(x + 16); }
inline Real amm2(const Real& x) { return (3 * mp::cos(x) - mp::sin(x)) / 2; }
inline Real amm3(const Real& x) { return mp::cos(x) / (2 * x * x + 1); }

/// I_n(1) = sum_k (1/2)^{n+2k} / (k! (n+k)!)
inline Real bessel_i1(int n) {
    Real sum = 0, term = 1;
    for (int k = 1; k <= n; ++k) term /= 2 * k; // (1/2)^n / n!
    for (int k = 0; k < 200; ++k) {
        sum += term;
        term /= 4 * Real(k + 1) * Real(n + k + 1);
    }
    return sum;
}

/// Chebyshev coefficients u_0..u_count-1 of f from M-point Chebyshev-Gauss
/// quadrature; for f analytic in the ellipse rho the aliasing error is about rho^{-2M}.
inline std::vector<Real> cheb_interp(const std::function<Real(const Real&)>& f, int count, int M) {
    const Real pi = mp::acos(Real(-1));
    std::vector<Real> fx(static_cast<size_t>(M)), th(static_cast<size_t>(M));
    for (int k = 0; k < M; ++k) {
        th[static_cast<size_t>(k)] = pi * (2 * k + 1) / (2 * M);
        fx[static_cast<size_t>(k)] = f(mp::cos(th[static_cast<size_t>(k)]));
    }
    std::vector<Real> u(static_cast<size_t>(count));
    for (int n = 0; n < count; ++n) {
        Real s = 0;
        for (int k = 0; k < M; ++k) s += fx[static_cast<size_t>(k)] * mp::cos(n * th[static_cast<size_t>(k)]);
        u[static_cast<size_t>(n)] = (n == 0 ? 1 : 2) * s / M;
    }
    return u;
}

inline bool leq(const Real& a, const Rational& b) { return a <= real(b); }
inline bool leq(const Rational& a, const Real& b) { return real(a) <= b; }

} // namespace ref
