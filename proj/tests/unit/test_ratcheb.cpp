#include "dfc/errors.hpp"
#include "dfc/ratcheb.hpp"
#include "corpus.hpp"
#include "reference.hpp"

#include <doctest.h>

using namespace dfc;
using ref::frac;
namespace mp = boost::multiprecision;

namespace {

std::function<ref::Real(const ref::Real&)> ratfun(const Poly& a, const Poly& b) {
    return [a, b](const ref::Real& x) { return ref::horner(a, x) / ref::horner(b, x); };
}

bool encloses(const Ball& b, const ref::Real& x, const ref::Real& slack) {
    return mp::abs(ref::real(b.mid) - x) <= ref::real(b.rad) + slack;
}

} // namespace

TEST_CASE("partial fractions of 1/(2 - x)") {
    PartialFractionForm pf = partial_fractions(Poly{1}, Poly{2, -1});
    CHECK(pf.D == 1);
    CHECK(pf.q.is_zero());
    REQUIRE(pf.factors.size() == 1);
    CHECK(pf.factors[0].multiplicity == 1);
    CHECK(pf.factors[0].beta == Poly{1, -4, 1});
    REQUIRE(pf.factors[0].outer.size() == 1);
    REQUIRE(pf.factors[0].inner.size() == 1);
    const ref::Real rho = 2 + mp::sqrt(ref::Real(3));
    CHECK(ref::leq(pf.rho_minus(), rho));
    CHECK(ref::leq(rho, pf.rho_plus()));
    // y_n = (2 - sqrt 3)^|n| / sqrt 3
    for (long n : {0L, 1L, 5L, 20L}) {
        ref::Real expect = mp::pow(1 / rho, n) / mp::sqrt(ref::Real(3));
        CHECK(encloses(cheb_coeff(pf, n), expect, ref::Real(0)));
    }
    // sup of the tail is its value at x = 1: 2 sum_{n > d} y_n
    ref::Real tail = 2 * mp::pow(1 / rho, 21) / (1 - 1 / rho) / mp::sqrt(ref::Real(3));
    Rational t20 = tail_bound(pf, 20);
    CHECK(ref::leq(tail, t20));
    CHECK(ref::real(t20) <= 4 * tail);
    for (long d = 0; d < 30; ++d) CHECK(tail_bound(pf, d + 1) <= tail_bound(pf, d));
}

TEST_CASE("outer root of 1/(2(x + 16))") {
    PartialFractionForm pf = partial_fractions(Poly{1}, Poly{32, 2});
    const ref::Real rho = 16 + mp::sqrt(ref::Real(255));
    CHECK(ref::leq(pf.rho_minus(), rho));
    CHECK(ref::leq(rho, pf.rho_plus()));
    CHECK(to_double(pf.rho_minus()) == doctest::Approx(31.9687).epsilon(1e-5));
}

TEST_CASE("repeated and complex factors") {
    // 1/((x - 3)^2 (x^2 + 4)) with a numerator of higher degree
    Poly b = Poly{-3, 1} * Poly{-3, 1} * Poly{4, 0, 1};
    Poly a{1, 0, 0, 0, 0, 2};
    PartialFractionForm pf = partial_fractions(a, b);
    CHECK(pf.q.degree() == 1);
    int maxmult = 0;
    for (const auto& f : pf.factors) maxmult = std::max(maxmult, f.multiplicity);
    CHECK(maxmult == 2);
    auto ref_coeffs = ref::cheb_interp(ratfun(a, b), 30, 400);
    auto c = cheb_coeffs(pf, 29);
    for (size_t n = 0; n < 30; ++n) CHECK(encloses(n == 0 ? c[n] : c[n] * Rational(2), ref_coeffs[n], ref::Real(1e-60)));
    for (long d = 1; d < 20; d += 3) {
        // a lower estimate of the tail sup from the sampled truncation error
        std::vector<Rational> u;
        for (long n = 0; n <= d; ++n) u.push_back(Rational(n == 0 ? c[0].mid : 2 * c[static_cast<size_t>(n)].mid));
        ref::Real lower = ref::sampled_error(ChebPoly(u), ratfun(a, b), 401);
        Rational slack = c[0].rad;
        for (long n = 1; n <= d; ++n) slack += 2 * c[static_cast<size_t>(n)].rad;
        CHECK(ref::leq(lower, tail_bound(pf, std::max<long>(d, pf.q.degree())) + slack));
    }
}

TEST_CASE("coefficients satisfy the multiplication recurrence") {
    // b y = a: for n > deg a + deg b the symmetric coefficients of b annihilate y
    Poly b{5, 1, 0, 2}, a{1, -1};
    PartialFractionForm pf = partial_fractions(a, b, 200);
    auto bs = to_symmetric(from_poly(b));
    const long s = static_cast<long>(bs.size()) - 1;
    auto c = cheb_coeffs(pf, 40);
    for (long n = 5; n + s <= 40; ++n) {
        Ball acc;
        for (long k = -s; k <= s; ++k) {
            long m = n - k < 0 ? k - n : n - k;
            acc = acc + c[static_cast<size_t>(m)] * bs[static_cast<size_t>(k < 0 ? -k : k)];
        }
        CHECK(acc.contains(Rational(0)));
        CHECK(acc.rad < pow(frac(1, 2), 150));
    }
}

TEST_CASE("refine_roots tightens enclosures") {
    PartialFractionForm pf = partial_fractions(Poly{1}, Poly{4, 0, 1, 1}, 40);
    Rational target = pow(frac(1, 2), 300);
    refine_roots(pf, target, 320);
    for (const auto& f : pf.factors) {
        for (const auto& r : f.outer) CHECK(r.radius < target);
        for (const auto& r : f.inner) CHECK(r.radius < target);
    }
}

TEST_CASE("expand_product examples") {
    ExpansionInfo info;
    ChebPoly p = expand_product(Poly{1}, Poly{2, -1}, ChebPoly::basis(0), pow10(-20), &info);
    CHECK(ref::sampled_error(p, ratfun(Poly{1}, Poly{2, -1})) <= ref::Real(1e-20));
    CHECK(info.tail <= pow10(-20) / 2);
    CHECK(info.coeff_error <= pow10(-20) / 2);
    CHECK(p.degree() == info.degree);
    // a polynomial quotient is returned exactly
    ChebPoly e = expand_product(Poly{-4, 0, 1}, Poly{-2, 1}, ChebPoly::basis(1), pow10(-5));
    CHECK(to_poly(e) == Poly{0, 1} * Poly{2, 1});
    CHECK_THROWS_AS(expand_product(Poly{1}, Poly{0, 1}, ChebPoly::basis(0), pow10(-5)), DomainError);
    CHECK_THROWS_AS(expand_product(Poly{1}, Poly{2, 1}, ChebPoly::basis(0), Rational(0)), InputError);
}

TEST_CASE("output degree grows linearly in ln(1/eps)") {
    std::vector<long> deg;
    for (int k : {10, 20, 40}) {
        ExpansionInfo info;
        expand_product(Poly{1, 1}, Poly{2, 0, 1}, ChebPoly::basis(0), pow10(-k), &info);
        deg.push_back(info.degree);
    }
    CHECK(deg[1] > deg[0]);
    CHECK(std::abs((deg[2] - deg[1]) - 2 * (deg[1] - deg[0])) <= 4);
}

TEST_CASE("expand_product soundness on random rational functions") {
    corpus::Rng rng(71);
    for (int t = 0; t < 25; ++t) {
        corpus::RationalCase rc = corpus::rational_case(rng);
        ChebPoly f = corpus::cheb(rng, static_cast<int>(corpus::uniform(rng, 0, 4)));
        for (int k : {5, 12}) {
            Rational eps = pow10(-k);
            ChebPoly p = expand_product(rc.a, rc.b, f, eps);
            auto target = [&](const ref::Real& x) { return ref::clenshaw(f, x) * ratfun(rc.a, rc.b)(x); };
            CHECK(ref::sampled_error(p, target, 801) <= ref::real(eps));
        }
    }
}
