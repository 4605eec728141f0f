#include "dfc/chebpoly.hpp"

#include "dfc/errors.hpp"

namespace dfc {

ChebPoly::ChebPoly(std::vector<Rational> u) : u_(std::move(u)) { compress(); }

ChebPoly ChebPoly::basis(int n, const Rational& c) {
    std::vector<Rational> u(static_cast<size_t>(n) + 1);
    u[static_cast<size_t>(n)] = c;
    return ChebPoly(std::move(u));
}

void ChebPoly::compress() {
    while (u_.size() > 1 && u_.back() == 0) u_.pop_back();
    if (u_.empty()) u_.emplace_back(0);
}

Rational ChebPoly::coeff(int n) const {
    if (n < 0 || n > degree()) return 0;
    return u_[static_cast<size_t>(n)];
}

ChebPoly ChebPoly::operator-() const {
    ChebPoly r = *this;
    for (auto& v : r.u_) v = -v;
    return r;
}

ChebPoly& ChebPoly::operator+=(const ChebPoly& o) {
    if (o.u_.size() > u_.size()) u_.resize(o.u_.size());
    for (size_t i = 0; i < o.u_.size(); ++i) u_[i] += o.u_[i];
    compress();
    return *this;
}

ChebPoly& ChebPoly::operator-=(const ChebPoly& o) {
    if (o.u_.size() > u_.size()) u_.resize(o.u_.size());
    for (size_t i = 0; i < o.u_.size(); ++i) u_[i] -= o.u_[i];
    compress();
    return *this;
}

ChebPoly& ChebPoly::operator*=(const Rational& c) {
    for (auto& v : u_) v *= c;
    compress();
    return *this;
}

Rational eval(const ChebPoly& p, const Rational& x) {
    const auto& u = p.coeffs();
    Rational b1 = 0, b2 = 0, tx = 2 * x;
    for (size_t k = u.size() - 1; k >= 1; --k) {
        Rational b0 = u[k] + tx * b1 - b2;
        b2 = std::move(b1);
        b1 = std::move(b0);
    }
    return u[0] + x * b1 - b2;
}

ChebPoly mul(const ChebPoly& a, const ChebPoly& b) {
    const auto& u = a.coeffs();
    const auto& v = b.coeffs();
    std::vector<Rational> r(u.size() + v.size() - 1);
    Rational t;
    for (size_t i = 0; i < u.size(); ++i) {
        if (u[i] == 0) continue;
        for (size_t j = 0; j < v.size(); ++j) {
            if (v[j] == 0) continue;
            t = u[i] * v[j];
            t /= 2;
            r[i + j] += t;
            r[i > j ? i - j : j - i] += t;
        }
    }
    return ChebPoly(std::move(r));
}

std::pair<ChebPoly, ChebPoly> divrem(const ChebPoly& a, const ChebPoly& b) {
    if (b.is_zero()) throw DomainError("Chebyshev division by zero");
    const int m = b.degree();
    const auto& bv = b.coeffs();
    std::vector<Rational> r = a.coeffs();
    if (a.degree() < m) return {ChebPoly(), a};
    std::vector<Rational> q(static_cast<size_t>(a.degree() - m) + 1);
    for (int n = a.degree(); n >= m; --n) {
        const Rational& an = r[static_cast<size_t>(n)];
        if (an == 0) continue;
        const int k = n - m;
        // leading coefficient of T_k * b
        Rational lead = (k == 0 || m == 0) ? bv[static_cast<size_t>(m)] : bv[static_cast<size_t>(m)] / 2;
        Rational c = an / lead;
        q[static_cast<size_t>(k)] += c;
        // r -= c T_k b, with T_k T_j = (T_{k+j} + T_{|k-j|}) / 2
        for (int j = 0; j <= m; ++j) {
            if (bv[static_cast<size_t>(j)] == 0) continue;
            Rational t = c * bv[static_cast<size_t>(j)] / 2;
            r[static_cast<size_t>(k + j)] -= t;
            r[static_cast<size_t>(k > j ? k - j : j - k)] -= t;
        }
        r[static_cast<size_t>(n)] = 0; // exact cancellation
    }
    r.resize(static_cast<size_t>(m > 0 ? m : 1));
    if (m == 0) r[0] = 0;
    return {ChebPoly(std::move(q)), ChebPoly(std::move(r))};
}

ChebPoly antiderivative(const ChebPoly& f) {
    const auto& u = f.coeffs();
    const size_t d = u.size() - 1;
    std::vector<Rational> F(d + 2);
    for (size_t n = 0; n <= d; ++n) {
        if (u[n] == 0) continue;
        if (n == 0) {
            F[1] += u[0];
        } else if (n == 1) {
            F[2] += u[1] / 4;
        } else {
            F[n + 1] += u[n] / static_cast<long>(2 * (n + 1));
            F[n - 1] -= u[n] / static_cast<long>(2 * (n - 1));
        }
    }
    // F(0): T_n(0) = 0 for odd n, (-1)^{n/2} for even n
    Rational at0 = 0;
    for (size_t n = 0; n < F.size(); n += 2) at0 += (n / 2) % 2 == 0 ? F[n] : Rational(-F[n]);
    F[0] -= at0;
    return ChebPoly(std::move(F));
}

ChebPoly derivative(const ChebPoly& f) {
    const auto& u = f.coeffs();
    const size_t d = u.size() - 1;
    if (d == 0) return ChebPoly();
    std::vector<Rational> c(d + 1);
    for (size_t k = d; k-- > 0;) {
        c[k] = (k + 2 <= d ? c[k + 2] : Rational(0)) + u[k + 1] * static_cast<long>(2 * (k + 1));
    }
    c[0] /= 2;
    c.resize(d);
    return ChebPoly(std::move(c));
}

ChebPoly derivative(const ChebPoly& f, int k) {
    ChebPoly g = f;
    for (int i = 0; i < k; ++i) g = derivative(g);
    return g;
}

Rational norm_upper(const ChebPoly& f) {
    Rational s = 0;
    for (const auto& v : f.coeffs()) s += abs(v);
    return s;
}

ChebPoly truncate(const ChebPoly& f, int d) {
    if (d < 0) throw InputError("negative truncation degree");
    if (d >= f.degree()) return f;
    std::vector<Rational> u(f.coeffs().begin(), f.coeffs().begin() + d + 1);
    return ChebPoly(std::move(u));
}

std::vector<Rational> to_monomial(const ChebPoly& f) {
    const auto& u = f.coeffs();
    const size_t d = u.size() - 1;
    std::vector<Rational> out(d + 1);
    std::vector<Rational> tprev{Rational(1)}, tcur{Rational(0), Rational(1)};
    out[0] += u[0];
    if (d >= 1) out[1] += u[1];
    for (size_t n = 2; n <= d; ++n) {
        std::vector<Rational> tn(n + 1);
        for (size_t i = 0; i < tcur.size(); ++i) tn[i + 1] += 2 * tcur[i];
        for (size_t i = 0; i < tprev.size(); ++i) tn[i] -= tprev[i];
        if (u[n] != 0)
            for (size_t i = 0; i <= n; ++i) out[i] += u[n] * tn[i];
        tprev = std::move(tcur);
        tcur = std::move(tn);
    }
    while (out.size() > 1 && out.back() == 0) out.pop_back();
    return out;
}

ChebPoly from_monomial(const std::vector<Rational>& a) {
    if (a.empty()) return ChebPoly();
    // Horner in the Chebyshev basis: acc <- x * acc + a_k
    std::vector<Rational> acc{a.back()};
    for (size_t k = a.size() - 1; k-- > 0;) {
        std::vector<Rational> nx(acc.size() + 1);
        for (size_t n = 0; n < acc.size(); ++n) {
            if (acc[n] == 0) continue;
            if (n == 0) {
                nx[1] += acc[0];
            } else {
                Rational h = acc[n] / 2;
                nx[n + 1] += h;
                nx[n - 1] += h;
            }
        }
        nx[0] += a[k];
        acc = std::move(nx);
    }
    return ChebPoly(std::move(acc));
}

std::vector<Rational> to_symmetric(const ChebPoly& f) {
    std::vector<Rational> c = f.coeffs();
    for (size_t n = 1; n < c.size(); ++n) c[n] /= 2;
    return c;
}

ChebPoly from_symmetric(const std::vector<Rational>& c) {
    std::vector<Rational> u = c;
    for (size_t n = 1; n < u.size(); ++n) u[n] *= 2;
    return ChebPoly(std::move(u));
}

std::vector<Rational> chebyshev_derivative_values(const Rational& x, int k, int count) {
    // rows j = 0..k of T_n^{(j)}(x); T^{(j)}_{n+1} = 2x T^{(j)}_n + 2j T^{(j-1)}_n - T^{(j)}_{n-1}
    std::vector<std::vector<Rational>> t(static_cast<size_t>(k) + 1,
                                         std::vector<Rational>(static_cast<size_t>(count)));
    for (int j = 0; j <= k; ++j) {
        auto& row = t[static_cast<size_t>(j)];
        for (int n = 0; n < count; ++n) {
            Rational v;
            if (n == 0) {
                v = j == 0 ? 1 : 0;
            } else if (n == 1) {
                v = j == 0 ? x : (j == 1 ? Rational(1) : Rational(0));
            } else {
                v = 2 * x * row[static_cast<size_t>(n - 1)] - row[static_cast<size_t>(n - 2)];
                if (j > 0) v += 2 * j * t[static_cast<size_t>(j - 1)][static_cast<size_t>(n - 1)];
            }
            row[static_cast<size_t>(n)] = std::move(v);
        }
    }
    return t[static_cast<size_t>(k)];
}

} // namespace dfc
