#include "dfc/validator.hpp"

#include "dfc/errors.hpp"
#include "dfc/ratcheb.hpp"

#include <algorithm>

namespace dfc {

namespace {

// Enclosure of p on [lo, hi] by its Taylor expansion at the midpoint:
// returns (|p(m)|, sum_{k>=1} |p^{(k)}(m)/k!| h^k).
std::pair<Rational, Rational> taylor_enclosure(const Poly& p, const Rational& lo, const Rational& hi) {
    Rational m = (lo + hi) / 2, h = (hi - lo) / 2;
    Poly c = p.shift(m);
    Rational rest = 0, pw = 1;
    for (int k = 1; k <= c.degree(); ++k) {
        pw *= h;
        rest += abs(c.coeff(k)) * pw;
    }
    return {abs(c.coeff(0)), rest};
}

Rational sup_abs(const Poly& p, const Rational& lo, const Rational& hi) {
    auto [v, r] = taylor_enclosure(p, lo, hi);
    return v + r;
}

Rational crude_kernel_bound(const VolterraSystem& vs) {
    Rational sb = 0;
    for (const auto& b : vs.beta) sb += norm_upper(from_poly(b));
    if (sb == 0) return 0;
    const Rational tol(1, 1000);
    ChebPoly inv = expand_product(Poly::constant(1), vs.alpha.back(), ChebPoly::basis(0), tol);
    return (norm_upper(inv) + tol) * sb;
}

std::optional<Rational> tight_kernel_bound(const VolterraSystem& vs, int pieces) {
    bool any = std::any_of(vs.beta.begin(), vs.beta.end(), [](const Poly& b) { return !b.is_zero(); });
    if (!any) return Rational(0);
    if (pieces % 2 != 0) ++pieces;
    const Poly& ar = vs.alpha.back();
    Rational A = 0;
    for (int k = 0; k < pieces; ++k) {
        Rational xa(2 * k - pieces, pieces), xb(2 * k + 2 - pieces, pieces);
        xa.canonicalize();
        xb.canonicalize();
        Rational xm = std::max(abs(xa), abs(xb));
        Rational ta = xa >= 0 ? Rational(0) : xa, tb = xb <= 0 ? Rational(0) : xb;
        auto [v, r] = taylor_enclosure(ar, xa, xb);
        Rational lo = v - r;
        if (lo <= 0) return std::nullopt;
        Rational K = 0, pw = 1;
        for (const auto& b : vs.beta) {
            K += pw * sup_abs(b, ta, tb);
            pw *= xm;
        }
        Rational piece = K / lo;
        if (piece > A) A = piece;
    }
    return A;
}

} // namespace

Rational kernel_bound(const VolterraSystem& vs, const ValidateOptions& opts) {
    Rational A;
    std::optional<Rational> tight;
    if (opts.tight_kernel) tight = tight_kernel_bound(vs, std::max(opts.subdivisions, 2));
    A = tight ? *tight : crude_kernel_bound(vs);
    return A == 0 ? A : upper_dyadic(A, 32);
}

int min_contraction_index(const Rational& A) {
    if (A < 0) throw InputError("kernel bound must be nonnegative");
    Rational t = A; // A^i / i!
    for (int i = 1;; ++i) {
        if (2 * t <= 1) return i;
        t = t * A / (i + 1);
    }
}

Rational gamma_bound(const Rational& A, int i) {
    if (i < 1) throw InputError("iteration count must be positive");
    const Rational c = pow(A, static_cast<unsigned long>(i)) / Rational(factorial(static_cast<unsigned long>(i)));
    if (c >= 1) throw InconclusiveError("no contraction: A^i/i! >= 1");
    const Rational cap = 1 / (1 - c);
    // sum_{j<4} A^{ij}/(ij)! + c^4/(1-c), using (ij)! >= (i!)^j
    Rational s = 1, pw = 1;
    Integer fact = 1;
    for (int j = 1; j < 4; ++j) {
        for (int k = (j - 1) * i + 1; k <= j * i; ++k) {
            pw *= A;
            fact *= k;
        }
        s += pw / Rational(fact);
    }
    s += pow(c, 4) / (1 - c);
    Rational g = s < cap ? s : cap;
    return upper_dyadic(g, 64);
}

Rational exp_upper(const Rational& A) {
    if (A < 0) throw InputError("exp_upper expects a nonnegative argument");
    const unsigned long K = 2 * static_cast<unsigned long>(ceil(A).get_ui()) + 10;
    Rational s = 0, t = 1;
    for (unsigned long k = 0; k < K; ++k) {
        s += t;
        t = t * A / Rational(static_cast<long>(k + 1));
    }
    // t = A^K/K!; later terms shrink by at least A/(K+1) <= 1/2
    s += t / (1 - A / Rational(static_cast<long>(K + 1)));
    return upper_dyadic(s, 64);
}

ValidationReport validate(const IvpProblem& ivp, const ChebPoly& p, const Rational& eps, const ValidateOptions& opts) {
    if (eps <= 0) throw InputError("accuracy must be positive");
    ivp.check();
    const VolterraSystem vs = volterra_system(ivp);
    ValidationReport rep;
    rep.epsilon = eps;
    rep.A = kernel_bound(vs, opts);
    int i = min_contraction_index(rep.A);
    bool found = false;
    for (int raise = 0; raise <= 2; ++raise, ++i) {
        try {
            rep.gamma = gamma_bound(rep.A, i);
            found = true;
            break;
        } catch (const InconclusiveError&) {
        }
    }
    if (!found) throw InconclusiveError("contraction bound failed after raising the iteration count twice");
    if (i > opts.max_iterations)
        throw InconclusiveError("kernel bound " + to_decimal(rep.A, 4) + " requires " + std::to_string(i) +
                                " iterations, more than the limit " + std::to_string(opts.max_iterations));
    rep.i = i;

    std::vector<ChebPoly> beta;
    for (const auto& b : vs.beta) beta.push_back(from_poly(b));
    const ChebPoly g = from_poly(vs.g);
    const ChebPoly x = ChebPoly::basis(1);
    const Poly one = Poly::constant(1);
    ChebPoly pk = p;
    for (int k = 0; k < i; ++k) {
        ChebPoly q = g;
        ChebPoly xj = ChebPoly::basis(0);
        for (size_t j = 0; j < beta.size(); ++j) {
            if (!beta[j].is_zero()) q += xj * antiderivative(beta[j] * pk);
            xj = xj * x;
        }
        pk = expand_product(one, vs.alpha.back(), q, eps);
    }
    const ChebPoly diff = p - pk;
    rep.delta = norm_upper(diff);
    rep.D = diff.degree() + 1;
    rep.expA = exp_upper(rep.A);
    const Rational noise = rep.expA * eps;
    rep.B = upper_dyadic(rep.gamma * (rep.delta + noise), 64);
    // b = 2/3 (delta / sqrt(D) - e^A eps), with sqrt(D) replaced by ceil(sqrt(D))
    Integer sq;
    Integer Dz = rep.D;
    mpz_sqrt(sq.get_mpz_t(), Dz.get_mpz_t());
    if (sq * sq < Dz) sq += 1;
    Rational lower = Rational(2, 3) * (rep.delta / Rational(sq) - noise);
    rep.b = lower > 0 ? lower_dyadic(lower, 64) : Rational(0);
    if (rep.b > rep.B) throw InternalError("lower bound exceeds upper bound");
    return rep;
}

} // namespace dfc
