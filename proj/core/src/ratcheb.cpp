#include "dfc/ratcheb.hpp"

#include "dfc/errors.hpp"

#include <unsupported/Eigen/Polynomials>

#include <algorithm>
#include <cmath>
#include <complex>
#include <sstream>

namespace dfc {

namespace {

constexpr long kMaxPrec = 1L << 18;

struct Cx {
    Rational re, im;
};

Cx operator-(const Cx& a, const Cx& b) { return {a.re - b.re, a.im - b.im}; }
Cx operator*(const Cx& a, const Cx& b) { return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re}; }
Rational norm2(const Cx& a) { return a.re * a.re + a.im * a.im; }
Cx operator/(const Cx& a, const Cx& b) {
    Rational n = norm2(b);
    return {(a.re * b.re + a.im * b.im) / n, (a.im * b.re - a.re * b.im) / n};
}
Cx rounded(const Cx& a, long prec) { return {round_dyadic(a.re, prec).value, round_dyadic(a.im, prec).value}; }

Cx horner(const Poly& p, const Cx& z) {
    Cx acc{Rational(0), Rational(0)};
    for (int i = p.degree(); i >= 0; --i) {
        acc = acc * z;
        acc.re += p.coeff(i);
    }
    return acc;
}

Rational modulus_lower(const RootEnclosure& e) {
    return lower_dyadic(sqrt_lower(e.re * e.re + e.im * e.im) - e.radius, 64);
}

Rational modulus_upper(const RootEnclosure& e) {
    return upper_dyadic(sqrt_upper(e.re * e.re + e.im * e.im) + e.radius, 64);
}

// x^n rounded upward after every product (x >= 0)
Rational pow_upper(const Rational& x, unsigned long n) {
    Rational result = 1, base = x;
    while (n > 0) {
        if (n & 1UL) result = upper_dyadic(result * base, 64);
        n >>= 1;
        if (n > 0) base = upper_dyadic(base * base, 64);
    }
    return result;
}

// z^D * u((z + 1/z)/2) for u on the Chebyshev basis, deg u <= D
Poly joukowski(const ChebPoly& u, int D) {
    std::vector<Rational> c(static_cast<size_t>(2 * D) + 1);
    for (int n = 0; n <= u.degree(); ++n) {
        Rational h = u.coeff(n) / 2;
        c[static_cast<size_t>(D + n)] += h;
        c[static_cast<size_t>(D - n)] += h;
    }
    return Poly(std::move(c));
}

Poly mulmod(const Poly& a, const Poly& b, const Poly& m) { return divrem(a * b, m).second; }

Poly invmod(const Poly& a, const Poly& m) {
    auto eg = extended_gcd(a, m);
    if (eg.g.degree() != 0) throw InternalError("element not invertible modulo a squarefree factor");
    return divrem(eg.u, m).second;
}

using Series = std::vector<Poly>; // coefficients of t^k in Q[zeta]/(m)

Series taylor(const Poly& p, int len, const Poly& m, int offset = 0) {
    Series s(static_cast<size_t>(len));
    Poly d = p.derivative(offset);
    Rational fact = factorial(static_cast<unsigned long>(offset));
    for (int k = 0; k < len; ++k) {
        s[static_cast<size_t>(k)] = divrem(d / fact, m).second;
        d = d.derivative();
        fact *= k + offset + 1;
    }
    return s;
}

Series series_mul(const Series& a, const Series& b, const Poly& m) {
    Series c(a.size());
    for (size_t i = 0; i < a.size(); ++i)
        for (size_t j = 0; i + j < a.size(); ++j) c[i + j] += mulmod(a[i], b[j], m);
    return c;
}

Series series_inv(const Series& a, const Poly& m) {
    Series inv(a.size());
    Poly i0 = invmod(a[0], m);
    inv[0] = i0;
    for (size_t k = 1; k < a.size(); ++k) {
        Poly acc;
        for (size_t l = 1; l <= k; ++l) acc += mulmod(a[l], inv[k - l], m);
        inv[k] = -mulmod(i0, acc, m);
    }
    return inv;
}

std::vector<Cx> seeds(const Poly& p) {
    const int m = p.degree();
    std::vector<Cx> out;
    if (m == 1) {
        out.push_back({-p.coeff(0) / p.coeff(1), Rational(0)});
        return out;
    }
    Eigen::VectorXd c(m + 1);
    for (int i = 0; i <= m; ++i) c(i) = to_double(p.coeff(i) / p.lc());
    bool ok = c.allFinite();
    std::vector<std::complex<double>> roots;
    if (ok) {
        Eigen::PolynomialSolver<double, Eigen::Dynamic> solver;
        solver.compute(c);
        for (Eigen::Index i = 0; i < solver.roots().size(); ++i) roots.push_back(solver.roots()(i));
        for (const auto& r : roots) ok = ok && std::isfinite(r.real()) && std::isfinite(r.imag());
    }
    if (!ok) {
        // standard Durand-Kerner start on a circle of the Cauchy radius
        roots.clear();
        double R = to_double(root_bound(p));
        std::complex<double> w(0.4, 0.9);
        std::complex<double> z = R;
        for (int i = 0; i < m; ++i) {
            z *= w;
            roots.push_back(z);
        }
    }
    for (const auto& r : roots) out.push_back({from_double(r.real()), from_double(r.imag())});
    return out;
}

// Simultaneous Weierstrass iteration on a monic squarefree polynomial.
void weierstrass(const Poly& p, std::vector<Cx>& z, long prec) {
    const size_t m = z.size();
    if (m == 1) {
        z[0] = rounded(z[0] - horner(p, z[0]) / horner(p.derivative(), z[0]), prec);
        return;
    }
    const Rational tol = Rational(1) / (Rational(Integer(1) << static_cast<unsigned long>(2 * (prec - 6))));
    for (int it = 0; it < 400; ++it) {
        bool done = true;
        for (size_t k = 0; k < m; ++k) {
            Cx den{Rational(1), Rational(0)};
            for (size_t j = 0; j < m; ++j)
                if (j != k) den = den * (z[k] - z[j]);
            if (norm2(den) == 0) {
                z[k].re += Rational(1, 1 << 20);
                z[k].im += Rational(1, 1 << 21);
                done = false;
                continue;
            }
            Cx delta = horner(p, z[k]) / den;
            Rational scale = norm2(z[k]);
            if (scale < 1) scale = 1;
            if (norm2(delta) > tol * scale) done = false;
            z[k] = rounded(z[k] - delta, prec);
        }
        if (done) return;
    }
}

struct Certified {
    std::vector<RootEnclosure> enc;
    bool disjoint = false;
    bool classified = false;
    Rational max_radius;
};

Certified certify(const Poly& p, const std::vector<Cx>& z) {
    Certified c;
    const Poly dp = p.derivative();
    const long m = p.degree();
    for (const auto& w : z) {
        Rational pz = norm2(horner(p, w));
        Rational dz = sqrt_lower(norm2(horner(dp, w)));
        RootEnclosure e{w.re, w.im, Rational(0)};
        if (pz != 0) {
            if (dz == 0) return c;
            e.radius = upper_dyadic(Rational(m) * sqrt_upper(pz) / dz, 32);
        }
        if (e.radius > c.max_radius) c.max_radius = e.radius;
        c.enc.push_back(e);
    }
    for (size_t i = 0; i < c.enc.size(); ++i)
        for (size_t j = i + 1; j < c.enc.size(); ++j) {
            Cx d{c.enc[i].re - c.enc[j].re, c.enc[i].im - c.enc[j].im};
            Rational rr = c.enc[i].radius + c.enc[j].radius;
            if (norm2(d) <= rr * rr) return c;
        }
    c.disjoint = true;
    c.classified = std::all_of(c.enc.begin(), c.enc.end(),
                               [](const RootEnclosure& e) { return modulus_lower(e) > 1 || modulus_upper(e) < 1; });
    return c;
}

void refine_factor(PartialFractionFactor& f, const Rational& radius, long prec) {
    std::vector<Cx> z;
    for (const auto& e : f.outer) z.push_back({e.re, e.im});
    for (const auto& e : f.inner) z.push_back({e.re, e.im});
    if (z.empty()) z = seeds(f.beta);
    long p = std::max<long>(prec, 64);
    Certified c;
    for (; p <= kMaxPrec; p *= 2) {
        weierstrass(f.beta, z, p);
        c = certify(f.beta, z);
        if (c.disjoint && c.classified && c.max_radius < radius) break;
    }
    if (p > kMaxPrec) {
        std::ostringstream os;
        os << "root refinement failed for a factor of degree " << f.beta.degree() << " at " << kMaxPrec
           << " bits (disjoint: " << c.disjoint << ", classified: " << c.classified
           << ", radius: " << to_decimal(c.max_radius, 3) << ", target: " << to_decimal(radius, 3) << ")";
        throw RefinementError(os.str());
    }
    f.outer.clear();
    f.inner.clear();
    for (auto& e : c.enc) (modulus_lower(e) > 1 ? f.outer : f.inner).push_back(std::move(e));
    if (2 * f.outer.size() != static_cast<size_t>(f.beta.degree()))
        throw InternalError("roots of a squarefree factor are not in reciprocal pairs");
}

void check_outer_count(const PartialFractionForm& pf) {
    long total = 0;
    for (const auto& f : pf.factors) total += f.multiplicity * static_cast<long>(f.outer.size());
    if (total != pf.D) throw InternalError("number of roots outside the unit disk differs from deg b");
}

void check_denominator(const Poly& b) {
    if (b.is_zero()) throw DomainError("denominator is zero");
    if (b.degree() > 0 && count_real_roots(b, Rational(-1), Rational(1)) > 0)
        throw DomainError("denominator vanishes on [-1, 1]");
}

Rational two_pow(long k) {
    Rational r = 1;
    if (k >= 0) mpz_mul_2exp(r.get_num_mpz_t(), r.get_num_mpz_t(), static_cast<mp_bitcnt_t>(k));
    else mpz_mul_2exp(r.get_den_mpz_t(), r.get_den_mpz_t(), static_cast<mp_bitcnt_t>(-k));
    return r;
}

long bit_length(long v) {
    long b = 0;
    while (v > 0) {
        ++b;
        v >>= 1;
    }
    return b;
}

} // namespace

Rational PartialFractionForm::rho_minus() const {
    Rational r;
    bool first = true;
    for (const auto& f : factors)
        for (const auto& e : f.outer) {
            Rational v = modulus_lower(e);
            if (first || v < r) r = v;
            first = false;
        }
    return r;
}

Rational PartialFractionForm::rho_plus() const {
    Rational r;
    for (const auto& f : factors)
        for (const auto& e : f.outer) {
            Rational v = modulus_upper(e);
            if (v > r) r = v;
        }
    return r;
}

PartialFractionForm partial_fractions(const ChebPoly& g, const Poly& b, long bits) {
    check_denominator(b);
    PartialFractionForm pf;
    pf.D = b.degree();
    const ChebPoly bc = from_poly(b);
    auto [q, rem] = divrem(g, bc);
    if (pf.D == 0) {
        pf.q = g * (1 / b.coeff(0));
        return pf;
    }
    pf.q = std::move(q);
    pf.prec = std::max<long>(64, bits + 32);
    if (rem.is_zero()) return pf;
    const Poly rho = joukowski(rem, pf.D);
    const Poly beta = joukowski(bc, pf.D);
    pf.content = beta.lc();
    const auto sqf = squarefree_factorization(beta);
    for (size_t idx = 0; idx < sqf.size(); ++idx) {
        const Poly& bi = sqf[idx];
        if (bi.degree() <= 0) continue;
        const int i = static_cast<int>(idx) + 1;
        Poly R = Poly::constant(pf.content);
        for (size_t k = 0; k < sqf.size(); ++k) {
            if (k == idx) continue;
            for (size_t e = 0; e <= k; ++e) R *= sqf[k];
        }
        // near a root zeta: w(zeta + t) = F(t) / t^i, F = rho / (gamma^i R)
        Series gamma = taylor(bi, i, bi, 1);
        Series den = taylor(R, i, bi);
        for (int e = 0; e < i; ++e) den = series_mul(den, gamma, bi);
        Series F = series_mul(taylor(rho, i, bi), series_inv(den, bi), bi);
        PartialFractionFactor fac;
        fac.multiplicity = i;
        fac.beta = bi;
        for (int j = 1; j <= i; ++j) {
            Poly h = F[static_cast<size_t>(i - j)];
            fac.h.push_back(j % 2 == 0 ? h : -h);
        }
        refine_factor(fac, two_pow(-bits), pf.prec);
        pf.factors.push_back(std::move(fac));
    }
    check_outer_count(pf);
    return pf;
}

PartialFractionForm partial_fractions(const Poly& a, const Poly& b, long bits) {
    check_denominator(b);
    Poly g = gcd(a, b);
    Poly ar = a, br = b;
    if (g.degree() > 0) {
        ar = divrem(a, g).first;
        br = divrem(b, g).first;
    }
    return partial_fractions(from_poly(ar), br, bits);
}

void refine_roots(PartialFractionForm& pf, const Rational& radius, long prec) {
    pf.prec = std::max(pf.prec, prec);
    for (auto& f : pf.factors) refine_factor(f, radius, pf.prec);
    check_outer_count(pf);
}

std::vector<Ball> cheb_coeffs(const PartialFractionForm& pf, long upto) {
    if (upto < 0) return {};
    std::vector<Ball> out(static_cast<size_t>(upto) + 1);
    for (long n = 0; n <= upto && n <= pf.q.degree(); ++n)
        out[static_cast<size_t>(n)] = Ball(n == 0 ? pf.q.coeff(0) : pf.q.coeff(static_cast<int>(n)) / 2);
    const long prec = pf.prec;
    for (const auto& f : pf.factors) {
        const int i = f.multiplicity;
        for (const auto& e : f.outer) {
            const ComplexBall Z = e.ball();
            const ComplexBall U = inverse(Z).rounded(prec);
            // H[j-1] = h_{i,j}(zeta) zeta^{-j}
            std::vector<ComplexBall> H;
            ComplexBall Uj = U;
            for (int j = 1; j <= i; ++j) {
                H.push_back((eval(f.h[static_cast<size_t>(j - 1)], Z, prec) * Uj).rounded(prec));
                Uj = (Uj * U).rounded(prec);
            }
            ComplexBall Un(Ball(Rational(1)));
            for (long n = 0; n <= upto; ++n) {
                Ball acc;
                for (int j = 1; j <= i; ++j) {
                    ComplexBall t = H[static_cast<size_t>(j - 1)] * Un;
                    if (j > 1) t = t * Rational(binomial(static_cast<unsigned long>(n + j - 1), static_cast<unsigned long>(j - 1)));
                    acc = acc + t.re;
                }
                out[static_cast<size_t>(n)] = (out[static_cast<size_t>(n)] + acc);
                Un = (Un * U).rounded(prec);
            }
        }
    }
    return out;
}

Ball cheb_coeff(const PartialFractionForm& pf, long n) {
    if (n < 0) n = -n;
    return cheb_coeffs(pf, n).back();
}

Rational tail_bound(const PartialFractionForm& pf, long d) {
    if (d < pf.q.degree()) throw InputError("tail bound requires d >= deg q");
    Rational sum = 0;
    const unsigned long dd = static_cast<unsigned long>(d);
    for (const auto& f : pf.factors) {
        for (const auto& e : f.outer) {
            const Rational L = modulus_lower(e);
            const Rational invL = upper_dyadic(1 / L, 64);
            const Rational invL1 = upper_dyadic(1 / (L - 1), 64);
            const Rational tail = pow_upper(invL, dd + 1);
            const ComplexBall Z = e.ball();
            for (int j = 1; j <= f.multiplicity; ++j) {
                Rational H = upper_dyadic(eval(f.h[static_cast<size_t>(j - 1)], Z, pf.prec).abs_upper(), 64);
                Rational t = H * pow_upper(Rational(static_cast<long>(d + 2)), static_cast<unsigned long>(j - 1)) *
                             pow_upper(invL1, static_cast<unsigned long>(j)) * tail;
                sum += upper_dyadic(t, 64);
            }
        }
    }
    return 2 * sum;
}

ChebPoly expand_product(const Poly& a, const Poly& b, const ChebPoly& f, const Rational& eps, ExpansionInfo* info) {
    if (eps <= 0) throw InputError("accuracy must be positive");
    check_denominator(b);
    Poly ar = a, br = b;
    Poly g0 = gcd(a, b);
    if (g0.degree() > 0) {
        ar = divrem(a, g0).first;
        br = divrem(b, g0).first;
    }
    ExpansionInfo local;
    ExpansionInfo& inf = info ? *info : local;
    inf = ExpansionInfo{};
    const ChebPoly g = mul(from_poly(ar), f);
    PartialFractionForm pf = partial_fractions(g, br, 64);
    if (pf.factors.empty()) {
        inf.degree = pf.q.degree();
        return pf.q;
    }
    inf.rho_minus = pf.rho_minus();
    inf.rho_plus = pf.rho_plus();
    const Rational& rm = inf.rho_minus;
    const Rational& rp = inf.rho_plus;

    // M bounds sup |h'| + |h / z| on the annulus rho_- <= |z| <= rho_+
    Rational M = 0;
    for (const auto& fac : pf.factors) {
        Rational rmj = 1;
        for (int j = 1; j <= fac.multiplicity; ++j) {
            rmj *= rm;
            const Poly& h = fac.h[static_cast<size_t>(j - 1)];
            Rational H = 0, Hp = 0, pw = 1;
            for (int k = 0; k <= h.degree(); ++k) {
                Rational c = abs(h.coeff(k));
                if (k > 0) Hp += c * k * pw / rp;
                H += c * pw;
                pw *= rp;
            }
            M += upper_dyadic(Rational(j * fac.beta.degree()) * (Hp + H / rm) / rmj, 64);
        }
    }
    inf.M = M;
    Rational ep = rm - 1;
    if (M > 0) {
        Rational alt = pow(1 - 1 / rm, static_cast<unsigned long>(pf.D + 1)) * eps / (4 * M);
        if (alt < ep) ep = alt;
    }
    inf.eps_prime = lower_dyadic(ep, 32);

    // smallest admissible degree d' >= deg q with tail <= eps/2
    const Rational half = eps / 2;
    const long d0 = std::max(pf.q.degree(), 0);
    auto ok = [&](long d) { return tail_bound(pf, d) <= half; };
    long dp = d0;
    if (!ok(d0)) {
        long lo = d0, hi = d0 + 1, step = 1;
        while (!ok(hi)) {
            lo = hi;
            step *= 2;
            hi = d0 + step;
            if (step > (1L << 26)) throw RefinementError("tail bound does not reach the requested accuracy");
        }
        while (hi - lo > 1) {
            long mid = lo + (hi - lo) / 2;
            (ok(mid) ? hi : lo) = mid;
        }
        dp = hi;
    }
    inf.degree = dp;

    long prec = std::max<long>(pf.prec, 1 - floor_log2(eps) + 2 * bit_length(dp + 2) + 64);
    for (int attempt = 0; attempt < 8; ++attempt) {
        Rational target = two_pow(-prec);
        if (inf.eps_prime < target) target = inf.eps_prime;
        refine_roots(pf, target, prec);
        std::vector<Ball> c = cheb_coeffs(pf, dp);
        Rational err = c[0].rad;
        for (size_t n = 1; n < c.size(); ++n) err += 2 * c[n].rad;
        inf.attempts = attempt + 1;
        inf.prec = pf.prec;
        inf.coeff_error = upper_dyadic(err, 64);
        if (err <= half) {
            inf.tail = tail_bound(pf, dp);
            std::vector<Rational> u(c.size());
            for (size_t n = 0; n < c.size(); ++n) u[n] = n == 0 ? c[n].mid : 2 * c[n].mid;
            return ChebPoly(std::move(u));
        }
        prec *= 2;
    }
    std::ostringstream os;
    os << "coefficient enclosures stay too wide: " << to_decimal(inf.coeff_error, 3) << " > "
       << to_decimal(half, 3) << " at " << inf.prec << " bits";
    throw RefinementError(os.str());
}

} // namespace dfc
